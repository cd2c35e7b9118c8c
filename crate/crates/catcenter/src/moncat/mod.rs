//! Strict monoidal categories: the table-backed substrate, the exact matrix
//! backend, (co)lax monoidal functors and braidings used as Yang-Baxter data.

pub mod matrix;

use std::sync::Arc;

use crate::error::{malformed, Error, Result};
use crate::fincat::{check_functor, discrete_category, validate_category, FinCategory, Functor};
use crate::report::Report;

pub use matrix::{kron, MatBackend, Matrix};

/// A strict monoidal structure on a table category.
///
/// `reversed` records which way the tensor is read when delooping: with
/// `reversed = true` (the default) horizontal composition `g∘f` is `g⊗f`;
/// with `reversed = false` it is `f⊗g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonCat {
    base: Arc<FinCategory>,
    tensor_obj: Vec<usize>,
    tensor_mor: Vec<usize>,
    unit: usize,
    reversed: bool,
    braiding: Option<Vec<usize>>,
}

impl MonCat {
    /// Tables are indexed `x * n + y` (objects) and `f * m + g`
    /// (morphisms). Only shapes and typing are checked here.
    pub fn new(base: Arc<FinCategory>, tensor_obj: Vec<usize>, tensor_mor: Vec<usize>, unit: usize) -> Result<Self> {
        let (n, m) = (base.n_objects(), base.n_morphisms());
        if tensor_obj.len() != n * n || tensor_mor.len() != m * m {
            return Err(malformed("tensor tables are not total"));
        }
        if unit >= n || tensor_obj.iter().any(|&x| x >= n) || tensor_mor.iter().any(|&x| x >= m) {
            return Err(malformed("tensor table entry out of range"));
        }
        let mc = MonCat { base, tensor_obj, tensor_mor, unit, reversed: true, braiding: None };
        for f in 0..m {
            for g in 0..m {
                let h = mc.tensor_mor(f, g);
                let b = &mc.base;
                if b.src(h) != mc.tensor(b.src(f), b.src(g)) || b.tgt(h) != mc.tensor(b.tgt(f), b.tgt(g)) {
                    return Err(malformed(format!(
                        "{}⊗{} = {} is ill-typed",
                        b.morphism_name(f),
                        b.morphism_name(g),
                        b.morphism_name(h)
                    )));
                }
            }
        }
        Ok(mc)
    }

    /// Attach a braiding-like family `c_{X,Y}: X⊗Y → Y⊗X` indexed `x * n + y`.
    pub fn with_braiding(mut self, table: Vec<usize>) -> Result<Self> {
        let n = self.base.n_objects();
        if table.len() != n * n {
            return Err(malformed("braiding table is not total"));
        }
        for x in 0..n {
            for y in 0..n {
                let c = table[x * n + y];
                if c >= self.base.n_morphisms()
                    || self.base.src(c) != self.tensor(x, y)
                    || self.base.tgt(c) != self.tensor(y, x)
                {
                    return Err(malformed(format!(
                        "braiding component at ({}, {}) is ill-typed",
                        self.base.object_name(x),
                        self.base.object_name(y)
                    )));
                }
            }
        }
        self.braiding = Some(table);
        Ok(self)
    }

    pub fn with_reversed(mut self, reversed: bool) -> Self {
        self.reversed = reversed;
        self
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn reversed(&self) -> bool {
        self.reversed
    }

    pub fn n_objects(&self) -> usize {
        self.base.n_objects()
    }

    pub fn tensor(&self, x: usize, y: usize) -> usize {
        self.tensor_obj[x * self.base.n_objects() + y]
    }

    pub fn tensor_mor(&self, f: usize, g: usize) -> usize {
        self.tensor_mor[f * self.base.n_morphisms() + g]
    }

    pub fn tensor_obj_table(&self) -> &[usize] {
        &self.tensor_obj
    }

    pub fn tensor_mor_table(&self) -> &[usize] {
        &self.tensor_mor
    }

    pub fn braiding(&self) -> Option<&[usize]> {
        self.braiding.as_deref()
    }

    /// The braiding as Yang-Baxter data, if one was declared.
    pub fn braiding_ybo(self: &Arc<Self>) -> Option<Ybo1> {
        self.braiding.clone().map(|components| Ybo1 { carrier: self.clone(), components })
    }
}

pub fn validate_moncat(m: &MonCat) -> Result<Report> {
    let b = &*m.base;
    let mut r = Report::new("monoidal category");
    r.absorb("base", validate_category(b)?);
    for law in [
        "associativity.objects",
        "associativity.morphisms",
        "unit.objects",
        "unit.morphisms",
        "functoriality.composition",
        "functoriality.identities",
    ] {
        r.declare(law);
    }
    let (n, nm) = (b.n_objects(), b.n_morphisms());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = m.tensor(m.tensor(x, y), z);
                let rhs = m.tensor(x, m.tensor(y, z));
                r.check("associativity.objects", lhs == rhs, || {
                    format!("({}, {}, {})", b.object_name(x), b.object_name(y), b.object_name(z))
                });
            }
        }
        r.check("unit.objects", m.tensor(m.unit, x) == x && m.tensor(x, m.unit) == x, || {
            format!("object {}", b.object_name(x))
        });
    }
    let idu = b.id(m.unit);
    for f in 0..nm {
        for g in 0..nm {
            for h in 0..nm {
                let lhs = m.tensor_mor(m.tensor_mor(f, g), h);
                let rhs = m.tensor_mor(f, m.tensor_mor(g, h));
                r.check("associativity.morphisms", lhs == rhs, || {
                    format!("({}, {}, {})", b.morphism_name(f), b.morphism_name(g), b.morphism_name(h))
                });
            }
        }
        r.check("unit.morphisms", m.tensor_mor(idu, f) == f && m.tensor_mor(f, idu) == f, || {
            format!("morphism {}", b.morphism_name(f))
        });
    }
    for x in 0..n {
        for y in 0..n {
            r.check("functoriality.identities", m.tensor_mor(b.id(x), b.id(y)) == b.id(m.tensor(x, y)), || {
                format!("({}, {})", b.object_name(x), b.object_name(y))
            });
        }
    }
    // (g⊗g')∘(f⊗f') = (g∘f)⊗(g'∘f')
    for (g, f) in b.composable_pairs() {
        for (g2, f2) in b.composable_pairs() {
            let lhs = b.compose(m.tensor_mor(g, g2), m.tensor_mor(f, f2));
            let rhs = m.tensor_mor(b.compose(g, f).unwrap(), b.compose(g2, f2).unwrap());
            r.check("functoriality.composition", lhs == Some(rhs), || {
                format!(
                    "({}∘{}) ⊗ ({}∘{})",
                    b.morphism_name(g),
                    b.morphism_name(f),
                    b.morphism_name(g2),
                    b.morphism_name(f2)
                )
            });
        }
    }
    Ok(r)
}

/// The discrete monoidal category of a finite monoid given by its
/// multiplication table `table[x][y] = x·y`. Rejects non-monoids.
pub fn group_moncat<S: AsRef<str>>(elements: &[S], table: &[Vec<usize>]) -> Result<MonCat> {
    let n = elements.len();
    if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&z| z >= n)) {
        return Err(malformed("multiplication table is not total"));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::NotStrict(format!(
                        "({}·{})·{} ≠ {}·({}·{})",
                        elements[x].as_ref(),
                        elements[y].as_ref(),
                        elements[z].as_ref(),
                        elements[x].as_ref(),
                        elements[y].as_ref(),
                        elements[z].as_ref()
                    )));
                }
            }
        }
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Precondition("multiplication table has no unit".into()))?;
    let base = Arc::new(discrete_category(elements)?);
    let tensor: Vec<usize> = table.iter().flatten().copied().collect();
    // morphisms of a discrete category are the identities, indexed like objects
    MonCat::new(base, tensor.clone(), tensor, unit)
}

/// Monoidal comparison cells of a functor: `mul` indexed `x * n + y`
/// (source objects), `unit` a single morphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonStructure {
    pub mul: Vec<usize>,
    pub unit: usize,
}

/// A functor between monoidal categories with lax structure
/// `F2_{x,y}: F(x)⊗F(y) → F(x⊗y)`, `F0: I' → F(I)` and/or colax structure
/// in the opposite direction. Strong = both, mutually inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxMonFunctor {
    pub source: Arc<MonCat>,
    pub target: Arc<MonCat>,
    pub functor: Functor,
    pub lax: Option<MonStructure>,
    pub colax: Option<MonStructure>,
}

impl LaxMonFunctor {
    /// A functor that preserves ⊗ and I on the nose, with identity
    /// comparison cells in both directions.
    pub fn strict(source: Arc<MonCat>, target: Arc<MonCat>, functor: Functor) -> Result<Self> {
        let n = source.n_objects();
        let t = target.base().clone();
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = target.tensor(functor.obj(x), functor.obj(y));
                if a != functor.obj(source.tensor(x, y)) {
                    return Err(Error::Precondition("functor does not preserve ⊗ strictly".into()));
                }
                mul.push(t.id(a));
            }
        }
        if functor.obj(source.unit()) != target.unit() {
            return Err(Error::Precondition("functor does not preserve the unit strictly".into()));
        }
        let unit = t.id(target.unit());
        let s = MonStructure { mul, unit };
        Ok(LaxMonFunctor { source, target, functor, lax: Some(s.clone()), colax: Some(s) })
    }

    pub fn identity(m: Arc<MonCat>) -> Self {
        let functor = Functor::identity(m.base().clone());
        Self::strict(m.clone(), m, functor).expect("identity is strict")
    }

    pub fn is_strong(&self) -> bool {
        self.lax.is_some() && self.colax.is_some()
    }

    pub fn f2(&self, x: usize, y: usize) -> Option<usize> {
        self.lax.as_ref().map(|s| s.mul[x * self.source.n_objects() + y])
    }

    pub fn f0(&self) -> Option<usize> {
        self.lax.as_ref().map(|s| s.unit)
    }

    pub fn g2(&self, x: usize, y: usize) -> Option<usize> {
        self.colax.as_ref().map(|s| s.mul[x * self.source.n_objects() + y])
    }

    pub fn g0(&self) -> Option<usize> {
        self.colax.as_ref().map(|s| s.unit)
    }
}

pub fn check_lax_monoidal(f: &LaxMonFunctor) -> Result<Report> {
    let (s, t) = (&*f.source, &*f.target);
    if *f.functor.source != **s.base() || *f.functor.target != **t.base() {
        return Err(Error::KindMismatch("functor bases differ from the monoidal categories".into()));
    }
    if f.lax.is_none() && f.colax.is_none() {
        return Err(Error::Precondition("no lax or colax structure given".into()));
    }
    let n = s.n_objects();
    for st in f.lax.iter().chain(&f.colax) {
        if st.mul.len() != n * n {
            return Err(malformed("comparison family does not cover every object pair"));
        }
        if st.mul.iter().chain([&st.unit]).any(|&x| x >= t.base().n_morphisms()) {
            return Err(malformed("comparison cell out of range"));
        }
    }
    let (sb, tb) = (&**s.base(), &**t.base());
    let mut r = Report::new("monoidal functor");
    r.absorb("functor", check_functor(&f.functor)?);
    let fo = |x: usize| f.functor.obj(x);
    let fm = |x: usize| f.functor.mor(x);
    let pair = |x: usize, y: usize| format!("({}, {})", sb.object_name(x), sb.object_name(y));
    let triple =
        |x: usize, y: usize, z: usize| format!("({}, {}, {})", sb.object_name(x), sb.object_name(y), sb.object_name(z));
    let ok_typed = |c: usize, a: usize, b: usize| tb.src(c) == a && tb.tgt(c) == b;
    let cmp = |g: Option<usize>, h: Option<usize>| g.and_then(|g| h.and_then(|h| tb.compose(g, h)));

    if let Some(lax) = &f.lax {
        for law in ["lax.typing", "lax.naturality", "lax.associativity", "lax.unitality"] {
            r.declare(law);
        }
        let f2 = |x: usize, y: usize| lax.mul[x * n + y];
        for x in 0..n {
            for y in 0..n {
                let ok = ok_typed(f2(x, y), t.tensor(fo(x), fo(y)), fo(s.tensor(x, y)));
                r.check("lax.typing", ok, || pair(x, y));
            }
        }
        let typed = r.law_passed("lax.typing");
        let f0_typed = ok_typed(lax.unit, t.unit(), fo(s.unit()));
        r.check("lax.unitality", f0_typed, || "F0 is not a morphism I' → F(I)".into());
        if typed {
            for a in 0..sb.n_morphisms() {
                for b in 0..sb.n_morphisms() {
                    let (x, y) = (sb.src(a), sb.src(b));
                    let (x2, y2) = (sb.tgt(a), sb.tgt(b));
                    let lhs = cmp(Some(f2(x2, y2)), Some(t.tensor_mor(fm(a), fm(b))));
                    let rhs = cmp(Some(fm(s.tensor_mor(a, b))), Some(f2(x, y)));
                    r.check("lax.naturality", lhs.is_some() && lhs == rhs, || {
                        format!("({}, {})", sb.morphism_name(a), sb.morphism_name(b))
                    });
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = cmp(Some(f2(s.tensor(x, y), z)), Some(t.tensor_mor(f2(x, y), tb.id(fo(z)))));
                        let rhs = cmp(Some(f2(x, s.tensor(y, z))), Some(t.tensor_mor(tb.id(fo(x)), f2(y, z))));
                        r.check("lax.associativity", lhs.is_some() && lhs == rhs, || triple(x, y, z));
                    }
                }
            }
            if f0_typed {
                let u = s.unit();
                for x in 0..n {
                    let idx = tb.id(fo(x));
                    let left = cmp(Some(f2(u, x)), Some(t.tensor_mor(lax.unit, idx)));
                    let right = cmp(Some(f2(x, u)), Some(t.tensor_mor(idx, lax.unit)));
                    r.check("lax.unitality", left == Some(idx) && right == Some(idx), || {
                        format!("object {}", sb.object_name(x))
                    });
                }
            }
        }
    }

    if let Some(colax) = &f.colax {
        for law in ["colax.typing", "colax.naturality", "colax.coassociativity", "colax.counitality"] {
            r.declare(law);
        }
        let g2 = |x: usize, y: usize| colax.mul[x * n + y];
        for x in 0..n {
            for y in 0..n {
                let ok = ok_typed(g2(x, y), fo(s.tensor(x, y)), t.tensor(fo(x), fo(y)));
                r.check("colax.typing", ok, || pair(x, y));
            }
        }
        let typed = r.law_passed("colax.typing");
        let g0_typed = ok_typed(colax.unit, fo(s.unit()), t.unit());
        r.check("colax.counitality", g0_typed, || "counit is not a morphism F(I) → I'".into());
        if typed {
            for a in 0..sb.n_morphisms() {
                for b in 0..sb.n_morphisms() {
                    let (x, y) = (sb.src(a), sb.src(b));
                    let (x2, y2) = (sb.tgt(a), sb.tgt(b));
                    let lhs = cmp(Some(t.tensor_mor(fm(a), fm(b))), Some(g2(x, y)));
                    let rhs = cmp(Some(g2(x2, y2)), Some(fm(s.tensor_mor(a, b))));
                    r.check("colax.naturality", lhs.is_some() && lhs == rhs, || {
                        format!("({}, {})", sb.morphism_name(a), sb.morphism_name(b))
                    });
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = cmp(Some(t.tensor_mor(g2(x, y), tb.id(fo(z)))), Some(g2(s.tensor(x, y), z)));
                        let rhs = cmp(Some(t.tensor_mor(tb.id(fo(x)), g2(y, z))), Some(g2(x, s.tensor(y, z))));
                        r.check("colax.coassociativity", lhs.is_some() && lhs == rhs, || triple(x, y, z));
                    }
                }
            }
            if g0_typed {
                let u = s.unit();
                for x in 0..n {
                    let idx = tb.id(fo(x));
                    let left = cmp(Some(t.tensor_mor(colax.unit, idx)), Some(g2(u, x)));
                    let right = cmp(Some(t.tensor_mor(idx, colax.unit)), Some(g2(x, u)));
                    r.check("colax.counitality", left == Some(idx) && right == Some(idx), || {
                        format!("object {}", sb.object_name(x))
                    });
                }
            }
        }
    }

    if let (Some(lax), Some(colax)) = (&f.lax, &f.colax) {
        r.declare("strong.inverses");
        if r.law_passed("lax.typing") && r.law_passed("colax.typing") {
            for x in 0..n {
                for y in 0..n {
                    let (a, b) = (lax.mul[x * n + y], colax.mul[x * n + y]);
                    let ok = tb.compose(a, b) == Some(tb.id(fo(s.tensor(x, y))))
                        && tb.compose(b, a) == Some(tb.id(t.tensor(fo(x), fo(y))));
                    r.check("strong.inverses", ok, || pair(x, y));
                }
            }
            let ok = tb.compose(lax.unit, colax.unit) == Some(tb.id(fo(s.unit())))
                && tb.compose(colax.unit, lax.unit) == Some(tb.id(t.unit()));
            r.check("strong.inverses", ok, || "unit comparison".into());
        }
    }
    Ok(r)
}

/// Yang-Baxter data on a monoidal category: `ν_{X,Y}: X⊗Y → Y⊗X`,
/// indexed `x * n + y`. Its equations are checked through the delooping
/// (see `bilax::check_ybo1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ybo1 {
    pub carrier: Arc<MonCat>,
    pub components: Vec<usize>,
}

/// Spot-check the strict monoidal laws of the matrix backend on a pool.
pub fn validate_matbackend(backend: &MatBackend, pool: &[Matrix]) -> Report {
    let mut r = Report::new(format!("matrices over F_{}", backend.p()));
    for law in ["associativity", "unit", "functoriality.composition", "functoriality.identities"] {
        r.declare(law);
    }
    let one = backend.identity(1);
    for (i, a) in pool.iter().enumerate() {
        r.check("unit", kron(&one, a) == *a && kron(a, &one) == *a, || format!("pool[{i}]"));
        for (j, b) in pool.iter().enumerate() {
            for (k, c) in pool.iter().enumerate() {
                let ok = kron(&kron(a, b), c) == kron(a, &kron(b, c));
                r.check("associativity", ok, || format!("pool[{i}, {j}, {k}]"));
            }
        }
    }
    for (i, g) in pool.iter().enumerate() {
        for (j, f) in pool.iter().enumerate() {
            let Ok(gf) = g.mul(f) else { continue };
            for (k, g2) in pool.iter().enumerate() {
                for (l, f2) in pool.iter().enumerate() {
                    let Ok(gf2) = g2.mul(f2) else { continue };
                    let lhs = kron(g, g2).mul(&kron(f, f2));
                    r.check("functoriality.composition", lhs.as_ref() == Ok(&kron(&gf, &gf2)), || {
                        format!("pool[{i}∘{j}] ⊗ pool[{k}∘{l}]")
                    });
                }
            }
        }
    }
    let dims: Vec<usize> = pool.iter().flat_map(|m| [m.rows(), m.cols()]).collect();
    for &m in &dims {
        for &n in &dims {
            let ok = kron(&backend.identity(m), &backend.identity(n)) == backend.identity(m * n);
            r.check("functoriality.identities", ok, || format!("({m}, {n})"));
        }
    }
    r
}
