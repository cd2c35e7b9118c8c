//! Table-backed finite categories, functors and natural transformations.
//!
//! Objects and morphisms are addressed by their index in declaration order;
//! names are kept only for display and for the spec file format.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{malformed, Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by explicit tables.
///
/// `compose[g * m + f]` holds `g∘f` when `tgt(f) = src(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
}

impl FinCategory {
    /// Build a category from index tables. `compose` lists `(g, f, g∘f)`
    /// and must cover every composable pair exactly once. Only the shape is
    /// checked here; the category laws are checked by [`validate_category`].
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for &(g, f, h) in compose {
            if g >= m || f >= m || h >= m {
                return Err(malformed(format!("compose entry ({g},{f},{h}) out of range")));
            }
            if table[g * m + f].replace(h).is_some() {
                return Err(malformed(format!(
                    "duplicate compose entry for ({}, {})",
                    morphisms[g].name, morphisms[f].name
                )));
            }
        }
        let c = Self::assemble(objects, morphisms, identities, table);
        c.structure()?;
        Ok(c)
    }

    /// Build a category whose composition is computed by `comp(g, f)`.
    pub fn generate(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].tgt == morphisms[g].src {
                    table[g * m + f] = Some(comp(g, f));
                }
            }
        }
        let c = Self::assemble(objects, morphisms, identities, table);
        c.structure()?;
        Ok(c)
    }

    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Self {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, f) in morphisms.iter().enumerate() {
            if f.src < n && f.tgt < n {
                homs[f.src * n + f.tgt].push(i);
            }
        }
        FinCategory { objects, morphisms, identities, compose, homs }
    }

    /// Shape checks: ranges, uniqueness of names, typing and totality of
    /// the composition table. Failures here are malformed-table errors.
    fn structure(&self) -> Result<()> {
        let n = self.objects.len();
        let m = self.morphisms.len();
        if n == 0 {
            return Err(Error::EmptyObjects);
        }
        let mut seen = HashSet::new();
        for o in &self.objects {
            if !seen.insert(o.as_str()) {
                return Err(malformed(format!("duplicate object {o}")));
            }
        }
        let mut seen = HashSet::new();
        for f in &self.morphisms {
            if !seen.insert(f.name.as_str()) {
                return Err(malformed(format!("duplicate morphism {}", f.name)));
            }
            if f.src >= n || f.tgt >= n {
                return Err(malformed(format!("morphism {} has a dangling endpoint", f.name)));
            }
        }
        if self.identities.len() != n {
            return Err(malformed("identity table does not cover every object"));
        }
        for (a, &i) in self.identities.iter().enumerate() {
            if i >= m {
                return Err(malformed(format!("identity of {} is dangling", self.objects[a])));
            }
            if self.morphisms[i].src != a || self.morphisms[i].tgt != a {
                return Err(malformed(format!("identity of {} is not an endomorphism of it", self.objects[a])));
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.morphisms[f].tgt == self.morphisms[g].src;
                match (composable, self.compose[g * m + f]) {
                    (true, None) => {
                        return Err(malformed(format!(
                            "missing compose entry for ({}, {})",
                            self.morphisms[g].name, self.morphisms[f].name
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(malformed(format!(
                            "compose entry for non-composable ({}, {})",
                            self.morphisms[g].name, self.morphisms[f].name
                        )))
                    }
                    (true, Some(h)) => {
                        if h >= m {
                            return Err(malformed("compose entry out of range"));
                        }
                        let h = &self.morphisms[h];
                        if h.src != self.morphisms[f].src || h.tgt != self.morphisms[g].tgt {
                            return Err(malformed(format!(
                                "{}∘{} = {} has the wrong source or target",
                                self.morphisms[g].name, self.morphisms[f].name, h.name
                            )));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        Ok(())
    }

    /// Overwrite one composition entry without any checking. Meant for
    /// mutation tests; run [`validate_category`] on the result.
    pub fn with_compose_entry_unchecked(&self, g: usize, f: usize, h: usize) -> Self {
        let mut c = self.clone();
        let m = c.morphisms.len();
        c.compose[g * m + f] = Some(h);
        c
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|f| f.name == name)
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn id(&self, a: usize) -> usize {
        self.identities[a]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.src(f)] == f
    }

    /// `g∘f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let m = self.morphisms.len();
        self.compose.get(g * m + f).copied().flatten()
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    /// A two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == Some(self.id(a)) && self.compose(f, g) == Some(self.id(b)))
    }

    /// All `(g, f)` with `tgt(f) = src(g)`, in canonical order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.morphisms.len();
        (0..m).flat_map(move |g| (0..m).map(move |f| (g, f))).filter(move |&(g, f)| self.tgt(f) == self.src(g))
    }

    /// The product category; object `(i, j)` has index `i * |D| + j` and
    /// likewise for morphisms.
    pub fn product(c: &FinCategory, d: &FinCategory) -> Result<FinCategory> {
        let (nd, md) = (d.n_objects(), d.n_morphisms());
        let objects = c.objects.iter().flat_map(|a| d.objects.iter().map(move |b| format!("({a},{b})"))).collect();
        let morphisms = c
            .morphisms
            .iter()
            .flat_map(|f| {
                d.morphisms.iter().map(move |g| Morphism {
                    name: format!("({},{})", f.name, g.name),
                    src: f.src * nd + g.src,
                    tgt: f.tgt * nd + g.tgt,
                })
            })
            .collect();
        let identities = (0..c.n_objects())
            .flat_map(|a| (0..nd).map(move |b| (a, b)))
            .map(|(a, b)| c.id(a) * md + d.id(b))
            .collect();
        FinCategory::generate(objects, morphisms, identities, |g, f| {
            let (g1, g2) = (g / md, g % md);
            let (f1, f2) = (f / md, f % md);
            c.compose(g1, f1).unwrap() * md + d.compose(g2, f2).unwrap()
        })
    }
}

/// The discrete category on the given names.
pub fn discrete_category<S: AsRef<str>>(elements: &[S]) -> Result<FinCategory> {
    if elements.is_empty() {
        return Err(Error::EmptyObjects);
    }
    let objects: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let morphisms =
        objects.iter().enumerate().map(|(i, o)| Morphism { name: format!("id_{o}"), src: i, tgt: i }).collect();
    let identities = (0..objects.len()).collect();
    FinCategory::generate(objects, morphisms, identities, |g, _| g)
}

/// The thin category of a preorder given by its (reflexive, transitive)
/// relation `le[a][b]`; the unique morphism a → b is named `a<=b`.
pub fn preorder_category<S: AsRef<str>>(elements: &[S], le: &[Vec<bool>]) -> Result<FinCategory> {
    if elements.is_empty() {
        return Err(Error::EmptyObjects);
    }
    let n = elements.len();
    let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let mut morphisms = Vec::new();
    let mut index = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            if le[a][b] {
                index[a * n + b] = Some(morphisms.len());
                let name = if a == b { format!("id_{}", names[a]) } else { format!("{}<={}", names[a], names[b]) };
                morphisms.push(Morphism { name, src: a, tgt: b });
            }
        }
    }
    let identities = (0..n)
        .map(|a| index[a * n + a].ok_or_else(|| malformed("preorder is not reflexive")))
        .collect::<Result<Vec<_>>>()?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if le[a][b] && le[b][c] && !le[a][c] {
                    return Err(malformed("preorder is not transitive"));
                }
            }
        }
    }
    let ms = morphisms.clone();
    FinCategory::generate(names, morphisms, identities, |g, f| index[ms[f].src * n + ms[g].tgt].unwrap())
}

/// Check the category laws. Shape problems are returned as `Err` so that a
/// malformed table is never confused with a law violation.
pub fn validate_category(c: &FinCategory) -> Result<Report> {
    c.structure()?;
    let mut r = Report::new("category");
    r.declare("associativity");
    r.declare("left-unit");
    r.declare("right-unit");
    let m = c.n_morphisms();
    for h in 0..m {
        for g in 0..m {
            if c.tgt(g) != c.src(h) {
                continue;
            }
            let hg = c.compose(h, g).unwrap();
            for f in 0..m {
                if c.tgt(f) != c.src(g) {
                    continue;
                }
                let lhs = c.compose(hg, f).unwrap();
                let rhs = c.compose(h, c.compose(g, f).unwrap()).unwrap();
                r.check("associativity", lhs == rhs, || {
                    format!("({}, {}, {})", c.morphism_name(h), c.morphism_name(g), c.morphism_name(f))
                });
            }
        }
    }
    for f in 0..m {
        let (a, b) = (c.src(f), c.tgt(f));
        r.check("left-unit", c.compose(c.id(b), f) == Some(f), || {
            format!("object {} at {}", c.object_name(b), c.morphism_name(f))
        });
        r.check("right-unit", c.compose(f, c.id(a)) == Some(f), || {
            format!("object {} at {}", c.object_name(a), c.morphism_name(f))
        });
    }
    Ok(r)
}

/// A functor between table categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl Functor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.n_objects() || morphism_map.len() != source.n_morphisms() {
            return Err(malformed("functor tables do not cover the source category"));
        }
        if object_map.iter().any(|&a| a >= target.n_objects())
            || morphism_map.iter().any(|&f| f >= target.n_morphisms())
        {
            return Err(malformed("functor table points outside the target category"));
        }
        Ok(Functor { source, target, object_map, morphism_map })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let object_map = (0..c.n_objects()).collect();
        let morphism_map = (0..c.n_morphisms()).collect();
        Functor { source: c.clone(), target: c, object_map, morphism_map }
    }

    pub fn obj(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn mor(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Result<Functor> {
        if *first.target != *self.source {
            return Err(Error::NotComposable("functor target/source mismatch".into()));
        }
        Ok(Functor {
            source: first.source.clone(),
            target: self.target.clone(),
            object_map: first.object_map.iter().map(|&a| self.obj(a)).collect(),
            morphism_map: first.morphism_map.iter().map(|&f| self.mor(f)).collect(),
        })
    }
}

pub fn check_functor(f: &Functor) -> Result<Report> {
    let (s, t) = (&*f.source, &*f.target);
    let mut r = Report::new("functor");
    r.declare("typing");
    r.declare("identities");
    r.declare("composition");
    for m in 0..s.n_morphisms() {
        let fm = f.mor(m);
        r.check("typing", t.src(fm) == f.obj(s.src(m)) && t.tgt(fm) == f.obj(s.tgt(m)), || {
            format!("morphism {}", s.morphism_name(m))
        });
    }
    for a in 0..s.n_objects() {
        r.check("identities", f.mor(s.id(a)) == t.id(f.obj(a)), || format!("object {}", s.object_name(a)));
    }
    for (g, h) in s.composable_pairs() {
        let lhs = f.mor(s.compose(g, h).unwrap());
        let rhs = t.compose(f.mor(g), f.mor(h));
        r.check("composition", rhs == Some(lhs), || format!("({}, {})", s.morphism_name(g), s.morphism_name(h)));
    }
    Ok(r)
}

/// A natural transformation between parallel table functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransf {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<usize>,
}

impl NatTransf {
    pub fn identity(f: &Functor) -> Self {
        let components = (0..f.source.n_objects()).map(|a| f.target.id(f.obj(a))).collect();
        NatTransf { source: f.clone(), target: f.clone(), components }
    }

    /// Vertical composite `self · first` (first, then self).
    pub fn after(&self, first: &NatTransf) -> Result<NatTransf> {
        if first.target != self.source {
            return Err(Error::NotComposable("natural transformations are not composable".into()));
        }
        let t = &self.target.target;
        let components = first
            .components
            .iter()
            .zip(&self.components)
            .map(|(&a, &b)| t.compose(b, a).ok_or_else(|| malformed("ill-typed component")))
            .collect::<Result<_>>()?;
        Ok(NatTransf { source: first.source.clone(), target: self.target.clone(), components })
    }
}

pub fn check_nat(alpha: &NatTransf) -> Result<Report> {
    let (f, g) = (&alpha.source, &alpha.target);
    if f.source != g.source || f.target != g.target {
        return Err(Error::KindMismatch("natural transformation between non-parallel functors".into()));
    }
    if alpha.components.len() != f.source.n_objects() {
        return Err(malformed("component table does not cover the source objects"));
    }
    let (s, t) = (&*f.source, &*f.target);
    let mut r = Report::new("natural transformation");
    r.declare("typing");
    r.declare("naturality");
    for a in 0..s.n_objects() {
        let c = alpha.components[a];
        r.check("typing", c < t.n_morphisms() && t.src(c) == f.obj(a) && t.tgt(c) == g.obj(a), || {
            format!("object {}", s.object_name(a))
        });
    }
    if !r.passed() {
        return Ok(r);
    }
    for m in 0..s.n_morphisms() {
        let (a, b) = (s.src(m), s.tgt(m));
        let lhs = t.compose(alpha.components[b], f.mor(m));
        let rhs = t.compose(g.mor(m), alpha.components[a]);
        r.check("naturality", lhs.is_some() && lhs == rhs, || format!("square at {}", s.morphism_name(m)));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow() -> FinCategory {
        // A --f--> B
        let objects = vec!["A".into(), "B".into()];
        let morphisms = vec![
            Morphism { name: "1A".into(), src: 0, tgt: 0 },
            Morphism { name: "1B".into(), src: 1, tgt: 1 },
            Morphism { name: "f".into(), src: 0, tgt: 1 },
        ];
        FinCategory::from_parts(objects, morphisms, vec![0, 1], &[(0, 0, 0), (1, 1, 1), (2, 0, 2), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn trivial_category_passes() {
        let c = discrete_category(&["*"]).unwrap();
        assert!(validate_category(&c).unwrap().passed());
    }

    #[test]
    fn discrete_categories() {
        let c = discrete_category(&["e", "g"]).unwrap();
        assert_eq!((c.n_objects(), c.n_morphisms()), (2, 2));
        assert!(validate_category(&c).unwrap().passed());
        assert_eq!(discrete_category::<&str>(&[]), Err(Error::EmptyObjects));
    }

    #[test]
    fn wrong_source_is_malformed_not_a_law_failure() {
        let c = arrow();
        assert!(validate_category(&c).unwrap().passed());
        // f∘1A := 1B has the wrong source and target
        let bad = c.with_compose_entry_unchecked(2, 0, 1);
        assert!(matches!(validate_category(&bad), Err(Error::Malformed(_))));
    }

    #[test]
    fn missing_entry_is_malformed() {
        let c = arrow();
        let objects = c.objects().to_vec();
        let morphisms = c.morphisms().to_vec();
        let r = FinCategory::from_parts(objects, morphisms, vec![0, 1], &[(0, 0, 0), (1, 1, 1)]);
        assert!(matches!(r, Err(Error::Malformed(_))));
    }

    #[test]
    fn preorder_is_thin() {
        let le = vec![vec![true, true], vec![false, true]];
        let c = preorder_category(&["0", "1"], &le).unwrap();
        assert_eq!(c.n_morphisms(), 3);
        assert_eq!(c.hom(0, 1).len(), 1);
        assert!(c.hom(1, 0).is_empty());
        assert!(validate_category(&c).unwrap().passed());
    }

    #[test]
    fn identity_functor_and_nat() {
        let c = Arc::new(arrow());
        let f = Functor::identity(c);
        assert!(check_functor(&f).unwrap().passed());
        let a = NatTransf::identity(&f);
        assert!(check_nat(&a).unwrap().passed());
        assert_eq!(a.after(&a).unwrap(), a);
    }

    #[test]
    fn swapping_identities_breaks_identity_preservation() {
        let c = Arc::new(discrete_category(&["a", "b"]).unwrap());
        let f = Functor::new(c.clone(), c, vec![0, 1], vec![1, 0]).unwrap();
        let r = check_functor(&f).unwrap();
        assert!(!r.law_passed("identities"));
    }

    #[test]
    fn product_of_arrows() {
        let c = arrow();
        let p = FinCategory::product(&c, &c).unwrap();
        assert_eq!(p.n_objects(), 4);
        assert_eq!(p.n_morphisms(), 9);
        assert!(validate_category(&p).unwrap().passed());
    }

    #[test]
    fn inverse_search() {
        let c = arrow();
        assert_eq!(c.inverse(2), None);
        assert_eq!(c.inverse(0), Some(0));
    }
}
