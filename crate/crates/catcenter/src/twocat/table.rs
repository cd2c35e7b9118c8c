//! Table-backed finite strict 2-categories and the two delooping
//! constructions (monoidal categories, bimodule categories).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::fincat::{check_functor, discrete_category, validate_category, FinCategory, Functor};
use crate::moncat::MonCat;
use crate::report::Report;

use super::strict::{Finite2Cat, Strict2Cat};

/// A 1-cell: object `idx` of the hom-category `hom(src, tgt)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell1 {
    pub src: usize,
    pub tgt: usize,
    pub idx: usize,
}

/// A 2-cell: morphism `idx` of the hom-category `hom(src, tgt)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell2 {
    pub src: usize,
    pub tgt: usize,
    pub idx: usize,
}

type Triple = (usize, usize, usize);

/// A finite strict 2-category. Missing `(a, b)` keys are empty hom-categories.
/// Composition tables for `(a, b, c)` are indexed `g * |hom(a,b)| + f`
/// with `g` in `hom(b, c)` and `f` in `hom(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCat {
    zero_cells: Vec<String>,
    homs: BTreeMap<(usize, usize), Arc<FinCategory>>,
    hcomp_obj: BTreeMap<Triple, Vec<usize>>,
    hcomp_mor: BTreeMap<Triple, Vec<usize>>,
    units: Vec<usize>,
    ybo: BTreeMap<usize, Vec<usize>>,
}

impl TwoCat {
    /// Shape and typing are checked; the 2-category laws are checked by
    /// [`validate_twocat`].
    pub fn new(
        zero_cells: Vec<String>,
        homs: BTreeMap<(usize, usize), Arc<FinCategory>>,
        hcomp_obj: BTreeMap<Triple, Vec<usize>>,
        hcomp_mor: BTreeMap<Triple, Vec<usize>>,
        units: Vec<usize>,
    ) -> Result<Self> {
        let n = zero_cells.len();
        if n == 0 {
            return Err(Error::EmptyObjects);
        }
        if homs.keys().any(|&(a, b)| a >= n || b >= n) {
            return Err(malformed("hom-category indexed by an unknown 0-cell"));
        }
        if units.len() != n {
            return Err(malformed("one unit 1-cell per 0-cell is required"));
        }
        for (a, &u) in units.iter().enumerate() {
            match homs.get(&(a, a)) {
                Some(h) if u < h.n_objects() => {}
                _ => return Err(malformed(format!("unit of {} is not a 1-cell", zero_cells[a]))),
            }
        }
        for key in hcomp_obj.keys().chain(hcomp_mor.keys()) {
            let &(a, b, c) = key;
            if !homs.contains_key(&(a, b)) || !homs.contains_key(&(b, c)) {
                return Err(malformed(format!("composition table for empty hom at {key:?}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (Some(f), Some(g)) = (homs.get(&(a, b)), homs.get(&(b, c))) else { continue };
                    let name = format!("({}, {}, {})", zero_cells[a], zero_cells[b], zero_cells[c]);
                    let h = homs
                        .get(&(a, c))
                        .ok_or_else(|| malformed(format!("composites at {name} land in an empty hom")))?;
                    let to = hcomp_obj
                        .get(&(a, b, c))
                        .ok_or_else(|| malformed(format!("missing 1-cell composition at {name}")))?;
                    let tm = hcomp_mor
                        .get(&(a, b, c))
                        .ok_or_else(|| malformed(format!("missing 2-cell composition at {name}")))?;
                    if to.len() != g.n_objects() * f.n_objects() || tm.len() != g.n_morphisms() * f.n_morphisms() {
                        return Err(malformed(format!("composition table at {name} is not total")));
                    }
                    if to.iter().any(|&x| x >= h.n_objects()) || tm.iter().any(|&x| x >= h.n_morphisms()) {
                        return Err(malformed(format!("composition table at {name} out of range")));
                    }
                }
            }
        }
        Ok(TwoCat { zero_cells, homs, hcomp_obj, hcomp_mor, units, ybo: BTreeMap::new() })
    }

    /// The trivial 2-category: one cell in each dimension.
    pub fn trivial() -> Self {
        let hom = Arc::new(discrete_category(&["id"]).unwrap());
        let mut homs = BTreeMap::new();
        homs.insert((0, 0), hom);
        let mut to = BTreeMap::new();
        to.insert((0, 0, 0), vec![0]);
        let tm = to.clone();
        TwoCat::new(vec!["*".into()], homs, to, tm, vec![0]).unwrap()
    }

    /// Declare Yang-Baxter cells `ν_{g,f}: g∘f ⇒ f∘g` on the endo-1-cells
    /// of `a`, indexed `g * n + f`.
    pub fn with_ybo(mut self, a: usize, table: Vec<usize>) -> Result<Self> {
        let h = self.homs.get(&(a, a)).ok_or_else(|| malformed("no endo-hom for the YBO"))?.clone();
        let n = h.n_objects();
        if table.len() != n * n {
            return Err(malformed("YBO table is not total"));
        }
        for g in 0..n {
            for f in 0..n {
                let c = table[g * n + f];
                let gf = self.hcomp_obj[&(a, a, a)][g * n + f];
                let fg = self.hcomp_obj[&(a, a, a)][f * n + g];
                if c >= h.n_morphisms() || h.src(c) != gf || h.tgt(c) != fg {
                    return Err(malformed(format!(
                        "YBO cell at ({}, {}) is ill-typed",
                        h.object_name(g),
                        h.object_name(f)
                    )));
                }
            }
        }
        self.ybo.insert(a, table);
        Ok(self)
    }

    pub fn n_zero_cells(&self) -> usize {
        self.zero_cells.len()
    }

    pub fn zero_cell_name(&self, a: usize) -> &str {
        &self.zero_cells[a]
    }

    pub fn find_zero_cell(&self, name: &str) -> Option<usize> {
        self.zero_cells.iter().position(|z| z == name)
    }

    pub fn hom(&self, a: usize, b: usize) -> Option<&Arc<FinCategory>> {
        self.homs.get(&(a, b))
    }

    pub fn homs(&self) -> &BTreeMap<(usize, usize), Arc<FinCategory>> {
        &self.homs
    }

    pub fn hcomp_obj_tables(&self) -> &BTreeMap<Triple, Vec<usize>> {
        &self.hcomp_obj
    }

    pub fn hcomp_mor_tables(&self) -> &BTreeMap<Triple, Vec<usize>> {
        &self.hcomp_mor
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn ybo_tables(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.ybo
    }

    pub fn cell1(&self, a: usize, b: usize, idx: usize) -> Cell1 {
        Cell1 { src: a, tgt: b, idx }
    }

    pub fn cell2(&self, a: usize, b: usize, idx: usize) -> Cell2 {
        Cell2 { src: a, tgt: b, idx }
    }

    /// Look up a 1-cell by name in `hom(a, b)`.
    pub fn find_cell1(&self, a: usize, b: usize, name: &str) -> Option<Cell1> {
        self.hom(a, b)?.find_object(name).map(|idx| Cell1 { src: a, tgt: b, idx })
    }

    /// Look up a 2-cell by name in `hom(a, b)`.
    pub fn find_cell2(&self, a: usize, b: usize, name: &str) -> Option<Cell2> {
        self.hom(a, b)?.find_morphism(name).map(|idx| Cell2 { src: a, tgt: b, idx })
    }

    fn hom_of(&self, a: usize, b: usize) -> Result<&Arc<FinCategory>> {
        self.homs.get(&(a, b)).ok_or_else(|| Error::NotComposable(format!("hom({a}, {b}) is empty")))
    }
}

impl Strict2Cat for TwoCat {
    type Obj = usize;
    type C1 = Cell1;
    type C2 = Cell2;

    fn src1(&self, x: &Cell1) -> usize {
        x.src
    }
    fn tgt1(&self, x: &Cell1) -> usize {
        x.tgt
    }
    fn id1(&self, a: &usize) -> Cell1 {
        Cell1 { src: *a, tgt: *a, idx: self.units[*a] }
    }
    fn comp1(&self, g: &Cell1, f: &Cell1) -> Result<Cell1> {
        if g.src != f.tgt {
            return Err(Error::NotComposable(format!("{} ∘ {}", self.show1(g), self.show1(f))));
        }
        let nf = self.hom_of(f.src, f.tgt)?.n_objects();
        let idx = self.hcomp_obj[&(f.src, f.tgt, g.tgt)][g.idx * nf + f.idx];
        Ok(Cell1 { src: f.src, tgt: g.tgt, idx })
    }
    fn dom2(&self, a: &Cell2) -> Cell1 {
        Cell1 { src: a.src, tgt: a.tgt, idx: self.homs[&(a.src, a.tgt)].src(a.idx) }
    }
    fn cod2(&self, a: &Cell2) -> Cell1 {
        Cell1 { src: a.src, tgt: a.tgt, idx: self.homs[&(a.src, a.tgt)].tgt(a.idx) }
    }
    fn id2(&self, x: &Cell1) -> Cell2 {
        Cell2 { src: x.src, tgt: x.tgt, idx: self.homs[&(x.src, x.tgt)].id(x.idx) }
    }
    fn vcomp(&self, b: &Cell2, a: &Cell2) -> Result<Cell2> {
        let bad = || Error::NotComposable(format!("{} · {}", self.show2(b), self.show2(a)));
        if (a.src, a.tgt) != (b.src, b.tgt) {
            return Err(bad());
        }
        let idx = self.hom_of(a.src, a.tgt)?.compose(b.idx, a.idx).ok_or_else(bad)?;
        Ok(Cell2 { src: a.src, tgt: a.tgt, idx })
    }
    fn hcomp(&self, b: &Cell2, a: &Cell2) -> Result<Cell2> {
        if b.src != a.tgt {
            return Err(Error::NotComposable(format!("{} ∘ {}", self.show2(b), self.show2(a))));
        }
        let na = self.hom_of(a.src, a.tgt)?.n_morphisms();
        let idx = self.hcomp_mor[&(a.src, a.tgt, b.tgt)][b.idx * na + a.idx];
        Ok(Cell2 { src: a.src, tgt: b.tgt, idx })
    }
    fn inverse2(&self, a: &Cell2) -> Option<Cell2> {
        let idx = self.homs[&(a.src, a.tgt)].inverse(a.idx)?;
        Some(Cell2 { idx, ..*a })
    }
    fn ybo(&self, g: &Cell1, f: &Cell1) -> Option<Cell2> {
        let t = self.ybo.get(&g.src)?;
        if !(g.src == g.tgt && f.src == g.src && f.tgt == g.src) {
            return None;
        }
        let n = self.homs[&(g.src, g.src)].n_objects();
        Some(Cell2 { src: g.src, tgt: g.src, idx: t[g.idx * n + f.idx] })
    }
    fn show0(&self, a: &usize) -> String {
        self.zero_cells[*a].clone()
    }
    fn show1(&self, x: &Cell1) -> String {
        self.homs.get(&(x.src, x.tgt)).map_or("?".into(), |h| h.object_name(x.idx).to_string())
    }
    fn show2(&self, a: &Cell2) -> String {
        self.homs.get(&(a.src, a.tgt)).map_or("?".into(), |h| h.morphism_name(a.idx).to_string())
    }
}

impl Finite2Cat for TwoCat {
    fn zero_cells(&self) -> Vec<usize> {
        (0..self.zero_cells.len()).collect()
    }
    fn one_cells(&self, a: &usize, b: &usize) -> Vec<Cell1> {
        match self.homs.get(&(*a, *b)) {
            Some(h) => (0..h.n_objects()).map(|idx| Cell1 { src: *a, tgt: *b, idx }).collect(),
            None => Vec::new(),
        }
    }
    fn two_cells(&self, x: &Cell1, y: &Cell1) -> Result<Vec<Cell2>> {
        if (x.src, x.tgt) != (y.src, y.tgt) {
            return Ok(Vec::new());
        }
        let h = self.hom_of(x.src, x.tgt)?;
        Ok(h.hom(x.idx, y.idx).iter().map(|&idx| Cell2 { src: x.src, tgt: x.tgt, idx }).collect())
    }
}

/// Horizontal composition `hom(b,c) × hom(a,b) → hom(a,c)` as a functor on
/// the product category.
pub fn composition_functor(k: &TwoCat, a: usize, b: usize, c: usize) -> Result<Functor> {
    let f = k.hom_of(a, b)?;
    let g = k.hom_of(b, c)?;
    let h = k.hom_of(a, c)?.clone();
    let prod = Arc::new(FinCategory::product(g, f)?);
    Functor::new(prod, h, k.hcomp_obj[&(a, b, c)].clone(), k.hcomp_mor[&(a, b, c)].clone())
}

pub fn validate_twocat(k: &TwoCat) -> Result<Report> {
    let mut r = Report::new("2-category");
    for law in ["hom", "hcomp", "associativity.1cells", "associativity.2cells", "unit.1cells", "unit.2cells"] {
        r.declare(law);
    }
    for (&(a, b), h) in &k.homs {
        let rep = validate_category(h)?;
        for l in rep.laws {
            r.check("hom", l.passed, || format!("hom({}, {}): {}", k.zero_cells[a], k.zero_cells[b], l.law));
        }
    }
    let n = k.n_zero_cells();
    for &(a, b, c) in k.hcomp_obj.keys() {
        let rep = check_functor(&composition_functor(k, a, b, c)?)?;
        for l in rep.laws {
            r.check("hcomp", l.passed, || {
                let w = l.witnesses.first().cloned().unwrap_or_default();
                format!("({}, {}, {}) {}: {w}", k.zero_cells[a], k.zero_cells[b], k.zero_cells[c], l.law)
            });
        }
    }
    let two = |x: &Cell1| -> Vec<Cell2> {
        let h = &k.homs[&(x.src, x.tgt)];
        (0..h.n_morphisms()).map(|idx| Cell2 { src: x.src, tgt: x.tgt, idx }).collect()
    };
    for a in 0..n {
        for b in 0..n {
            let fs = k.one_cells(&a, &b);
            for f in &fs {
                let ida = k.id1(&a);
                let idb = k.id1(&b);
                let ok = k.comp1(&idb, f).ok() == Some(*f) && k.comp1(f, &ida).ok() == Some(*f);
                r.check("unit.1cells", ok, || k.show1(f));
            }
            if let Some(first) = fs.first() {
                for al in two(first) {
                    let ok = k.hcomp(&k.id2(&k.id1(&b)), &al).ok() == Some(al)
                        && k.hcomp(&al, &k.id2(&k.id1(&a))).ok() == Some(al);
                    r.check("unit.2cells", ok, || k.show2(&al));
                }
            }
            for c in 0..n {
                for d in 0..n {
                    let (fs, gs, hs) = (&fs, k.one_cells(&b, &c), k.one_cells(&c, &d));
                    for f in fs {
                        for g in &gs {
                            for h in &hs {
                                let lhs = k.comp1(h, g).and_then(|hg| k.comp1(&hg, f));
                                let rhs = k.comp1(g, f).and_then(|gf| k.comp1(h, &gf));
                                r.check("associativity.1cells", lhs.is_ok() && lhs == rhs, || {
                                    format!("({}, {}, {})", k.show1(h), k.show1(g), k.show1(f))
                                });
                            }
                        }
                    }
                    let (Some(f), Some(g), Some(h)) = (fs.first(), gs.first(), hs.first()) else { continue };
                    for al in two(f) {
                        for be in two(g) {
                            for ga in two(h) {
                                let lhs = k.hcomp(&ga, &be).and_then(|x| k.hcomp(&x, &al));
                                let rhs = k.hcomp(&be, &al).and_then(|x| k.hcomp(&ga, &x));
                                r.check("associativity.2cells", lhs.is_ok() && lhs == rhs, || {
                                    format!("({}, {}, {})", k.show2(&ga), k.show2(&be), k.show2(&al))
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}

/// The one-object 2-category of a strict monoidal category. With the
/// monoidal category's `reversed` flag set, `g∘f = g⊗f`; otherwise
/// `g∘f = f⊗g`.
pub fn deloop_moncat(m: &MonCat) -> TwoCat {
    let base = m.base().clone();
    let (n, nm) = (base.n_objects(), base.n_morphisms());
    let (to, tm): (Vec<usize>, Vec<usize>) = if m.reversed() {
        (m.tensor_obj_table().to_vec(), m.tensor_mor_table().to_vec())
    } else {
        (
            (0..n * n).map(|i| m.tensor(i % n, i / n)).collect(),
            (0..nm * nm).map(|i| m.tensor_mor(i % nm, i / nm)).collect(),
        )
    };
    let mut homs = BTreeMap::new();
    homs.insert((0, 0), base);
    let k = TwoCat::new(
        vec!["*".into()],
        homs,
        BTreeMap::from([((0, 0, 0), to)]),
        BTreeMap::from([((0, 0, 0), tm)]),
        vec![m.unit()],
    )
    .expect("delooping of a well-formed monoidal category");
    match m.braiding() {
        Some(c) => {
            let t = if m.reversed() { c.to_vec() } else { (0..n * n).map(|i| c[(i % n) * n + i / n]).collect() };
            k.with_ybo(0, t).expect("braiding is typed")
        }
        None => k,
    }
}

/// The monoidal category `hom(a, a)` under horizontal composition. With
/// `reversed`, `x⊗y = x∘y`; otherwise `x⊗y = y∘x`.
pub fn endo_moncat(k: &TwoCat, a: usize, reversed: bool) -> Result<MonCat> {
    let h = k.hom_of(a, a)?.clone();
    let (n, nm) = (h.n_objects(), h.n_morphisms());
    let to = &k.hcomp_obj[&(a, a, a)];
    let tm = &k.hcomp_mor[&(a, a, a)];
    let (to, tm): (Vec<usize>, Vec<usize>) = if reversed {
        (to.clone(), tm.clone())
    } else {
        (
            (0..n * n).map(|i| to[(i % n) * n + i / n]).collect(),
            (0..nm * nm).map(|i| tm[(i % nm) * nm + i / nm]).collect(),
        )
    };
    let mut m = MonCat::new(h, to, tm, k.units[a])?.with_reversed(reversed);
    if let Some(t) = k.ybo.get(&a) {
        let b = if reversed { t.clone() } else { (0..n * n).map(|i| t[(i % n) * n + i / n]).collect() };
        m = m.with_braiding(b)?;
    }
    Ok(m)
}

/// A strict `(C, D)`-bimodule category: `c ⊳ m` indexed `c * |M| + m`,
/// `m ⊲ d` indexed `m * |D| + d`, on objects and on morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleCat {
    pub left: Arc<MonCat>,
    pub right: Arc<MonCat>,
    pub carrier: Arc<FinCategory>,
    pub left_obj: Vec<usize>,
    pub left_mor: Vec<usize>,
    pub right_obj: Vec<usize>,
    pub right_mor: Vec<usize>,
}

impl BimoduleCat {
    pub fn new(
        left: Arc<MonCat>,
        right: Arc<MonCat>,
        carrier: Arc<FinCategory>,
        left_obj: Vec<usize>,
        left_mor: Vec<usize>,
        right_obj: Vec<usize>,
        right_mor: Vec<usize>,
    ) -> Result<Self> {
        let (nm, mm) = (carrier.n_objects(), carrier.n_morphisms());
        let (c, d) = (left.base().clone(), right.base().clone());
        if left_obj.len() != c.n_objects() * nm
            || left_mor.len() != c.n_morphisms() * mm
            || right_obj.len() != nm * d.n_objects()
            || right_mor.len() != mm * d.n_morphisms()
        {
            return Err(malformed("action tables are not total"));
        }
        if left_obj.iter().chain(&right_obj).any(|&x| x >= nm) || left_mor.iter().chain(&right_mor).any(|&x| x >= mm) {
            return Err(malformed("action table entry out of range"));
        }
        if !left.reversed() || !right.reversed() {
            return Err(Error::Unsupported(
                "bimodule actions are read with the reversed (g∘f = g⊗f) convention only".into(),
            ));
        }
        let b = BimoduleCat { left, right, carrier, left_obj, left_mor, right_obj, right_mor };
        for f in 0..c.n_morphisms() {
            for u in 0..mm {
                let x = b.act_left_mor(f, u);
                let ok = b.carrier.src(x) == b.act_left(c.src(f), b.carrier.src(u))
                    && b.carrier.tgt(x) == b.act_left(c.tgt(f), b.carrier.tgt(u));
                if !ok {
                    return Err(malformed("left action on morphisms is ill-typed"));
                }
            }
        }
        for u in 0..mm {
            for g in 0..d.n_morphisms() {
                let x = b.act_right_mor(u, g);
                let ok = b.carrier.src(x) == b.act_right(b.carrier.src(u), d.src(g))
                    && b.carrier.tgt(x) == b.act_right(b.carrier.tgt(u), d.tgt(g));
                if !ok {
                    return Err(malformed("right action on morphisms is ill-typed"));
                }
            }
        }
        Ok(b)
    }

    pub fn act_left(&self, c: usize, m: usize) -> usize {
        self.left_obj[c * self.carrier.n_objects() + m]
    }
    pub fn act_left_mor(&self, f: usize, u: usize) -> usize {
        self.left_mor[f * self.carrier.n_morphisms() + u]
    }
    pub fn act_right(&self, m: usize, d: usize) -> usize {
        self.right_obj[m * self.right.n_objects() + d]
    }
    pub fn act_right_mor(&self, u: usize, g: usize) -> usize {
        self.right_mor[u * self.right.base().n_morphisms() + g]
    }
}

/// `C` as a bimodule over itself via the tensor product.
pub fn regular_bimodule(c: Arc<MonCat>) -> BimoduleCat {
    let base = c.base().clone();
    let t_obj = c.tensor_obj_table().to_vec();
    let t_mor = c.tensor_mor_table().to_vec();
    BimoduleCat::new(c.clone(), c, base, t_obj.clone(), t_mor.clone(), t_obj, t_mor)
        .expect("regular bimodule of a well-formed monoidal category")
}

pub fn validate_bimodule(b: &BimoduleCat) -> Result<Report> {
    let mut r = Report::new("bimodule category");
    r.absorb("left", crate::moncat::validate_moncat(&b.left)?);
    r.absorb("right", crate::moncat::validate_moncat(&b.right)?);
    for law in ["action.functoriality", "action.unit", "action.associativity", "action.compatibility"] {
        r.declare(law);
    }
    let m = &*b.carrier;
    let (c, d) = (&*b.left, &*b.right);
    let (cb, db) = (c.base(), d.base());
    for (g, f) in cb.composable_pairs() {
        for (v, u) in m.composable_pairs() {
            let lhs = m.compose(b.act_left_mor(g, v), b.act_left_mor(f, u));
            let rhs = b.act_left_mor(cb.compose(g, f).unwrap(), m.compose(v, u).unwrap());
            r.check("action.functoriality", lhs == Some(rhs), || format!("left ({g}, {f}) on ({v}, {u})"));
        }
    }
    for (v, u) in m.composable_pairs() {
        for (g, f) in db.composable_pairs() {
            let lhs = m.compose(b.act_right_mor(v, g), b.act_right_mor(u, f));
            let rhs = b.act_right_mor(m.compose(v, u).unwrap(), db.compose(g, f).unwrap());
            r.check("action.functoriality", lhs == Some(rhs), || format!("right ({v}, {u}) on ({g}, {f})"));
        }
    }
    for x in 0..m.n_objects() {
        for cc in 0..cb.n_objects() {
            r.check("action.functoriality", b.act_left_mor(cb.id(cc), m.id(x)) == m.id(b.act_left(cc, x)), || {
                format!("left identities at ({cc}, {x})")
            });
        }
        for dd in 0..db.n_objects() {
            r.check("action.functoriality", b.act_right_mor(m.id(x), db.id(dd)) == m.id(b.act_right(x, dd)), || {
                format!("right identities at ({x}, {dd})")
            });
        }
    }
    for u in 0..m.n_morphisms() {
        let ok = b.act_left_mor(cb.id(c.unit()), u) == u && b.act_right_mor(u, db.id(d.unit())) == u;
        r.check("action.unit", ok, || m.morphism_name(u).to_string());
        for f in 0..cb.n_morphisms() {
            for f2 in 0..cb.n_morphisms() {
                let lhs = b.act_left_mor(c.tensor_mor(f, f2), u);
                let rhs = b.act_left_mor(f, b.act_left_mor(f2, u));
                r.check("action.associativity", lhs == rhs, || format!("left ({f}, {f2}, {u})"));
            }
            for g in 0..db.n_morphisms() {
                let lhs = b.act_right_mor(b.act_left_mor(f, u), g);
                let rhs = b.act_left_mor(f, b.act_right_mor(u, g));
                r.check("action.compatibility", lhs == rhs, || format!("({f}, {u}, {g})"));
            }
        }
        for g in 0..db.n_morphisms() {
            for g2 in 0..db.n_morphisms() {
                let lhs = b.act_right_mor(u, d.tensor_mor(g, g2));
                let rhs = b.act_right_mor(b.act_right_mor(u, g), g2);
                r.check("action.associativity", lhs == rhs, || format!("right ({u}, {g}, {g2})"));
            }
        }
    }
    Ok(r)
}

/// The two-object 2-category of a bimodule category: `hom(0,0) = D`,
/// `hom(1,1) = C`, `hom(0,1) = M` and an empty `hom(1,0)`.
///
/// The back hom is left empty rather than trivial: a one-cell `hom(1,0)`
/// would force `c ⊳ z = z` for its single 1-cell `z` and every `c`, which
/// strict associativity cannot accommodate together with a faithful action
/// (see the tests). No 1-cell or 2-cell involving a path through `1 → 0`
/// is needed by any construction here.
pub fn deloop_bimodule(b: &BimoduleCat) -> Result<TwoCat> {
    let d = b.right.base().clone();
    let c = b.left.base().clone();
    let m = b.carrier.clone();
    let (nd, nc, nm) = (d.n_objects(), c.n_objects(), m.n_objects());
    let (md, mc, mm) = (d.n_morphisms(), c.n_morphisms(), m.n_morphisms());
    let homs = BTreeMap::from([((0, 0), d), ((1, 1), c), ((0, 1), m)]);
    let mut to = BTreeMap::new();
    let mut tm = BTreeMap::new();
    to.insert((0, 0, 0), b.right.tensor_obj_table().to_vec());
    tm.insert((0, 0, 0), b.right.tensor_mor_table().to_vec());
    to.insert((1, 1, 1), b.left.tensor_obj_table().to_vec());
    tm.insert((1, 1, 1), b.left.tensor_mor_table().to_vec());
    // m ∘ d = m ⊲ d
    to.insert((0, 0, 1), (0..nm * nd).map(|i| b.act_right(i / nd, i % nd)).collect());
    tm.insert((0, 0, 1), (0..mm * md).map(|i| b.act_right_mor(i / md, i % md)).collect());
    // c ∘ m = c ⊳ m
    to.insert((0, 1, 1), (0..nc * nm).map(|i| b.act_left(i / nm, i % nm)).collect());
    tm.insert((0, 1, 1), (0..mc * mm).map(|i| b.act_left_mor(i / mm, i % mm)).collect());
    TwoCat::new(vec!["0".into(), "1".into()], homs, to, tm, vec![b.right.unit(), b.left.unit()])
}
