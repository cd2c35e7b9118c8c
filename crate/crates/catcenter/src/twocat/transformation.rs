//! Lax and colax transformations between 2-functors, modifications, their
//! compositions, and brute-force enumeration of both.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::fincat::{FinCategory, Morphism};
use crate::report::Report;

use super::functor::{compose_functors, Cells, Functor2, Structure};
use super::strict::{Finite2Cat, Strict2Cat};

/// Colax: `χ_f: χ_B∘F(f) ⇒ G(f)∘χ_A`. Lax: `ψ_f: G(f)∘ψ_A ⇒ ψ_B∘F(f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransKind {
    Lax,
    Colax,
}

/// A (co)lax transformation `F ⇒ G`. `over` selects which comparison
/// structure of `F` and `G` the axioms are stated with.
pub struct Transformation2<S: Strict2Cat, T: Strict2Cat> {
    pub kind: TransKind,
    pub over: Structure,
    pub source: Arc<Functor2<S, T>>,
    pub target: Arc<Functor2<S, T>>,
    pub one_cells: BTreeMap<S::Obj, T::C1>,
    pub two_cells: BTreeMap<S::C1, T::C2>,
    /// Explicit inverses of the 2-cell components (pseudonatural case).
    pub inverses: Option<BTreeMap<S::C1, T::C2>>,
}

impl<S: Strict2Cat, T: Strict2Cat> Clone for Transformation2<S, T> {
    fn clone(&self) -> Self {
        Transformation2 {
            kind: self.kind,
            over: self.over,
            source: self.source.clone(),
            target: self.target.clone(),
            one_cells: self.one_cells.clone(),
            two_cells: self.two_cells.clone(),
            inverses: self.inverses.clone(),
        }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> fmt::Debug for Transformation2<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Transformation2")
            .field("kind", &self.kind)
            .field("over", &self.over)
            .field("source", &self.source.name)
            .field("target", &self.target.name)
            .field("one_cells", &self.one_cells)
            .field("two_cells", &self.two_cells)
            .finish()
    }
}

/// Equality of component data; the functors are not compared.
impl<S: Strict2Cat, T: Strict2Cat> PartialEq for Transformation2<S, T> {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.one_cells == other.one_cells && self.two_cells == other.two_cells
    }
}

impl<S: Strict2Cat, T: Strict2Cat> Transformation2<S, T> {
    pub fn chi(&self, a: &S::Obj) -> Result<T::C1> {
        self.one_cells.get(a).cloned().ok_or_else(|| malformed(format!("no 1-cell component at {a:?}")))
    }

    pub fn cell(&self, f: &S::C1) -> Result<T::C2> {
        self.two_cells.get(f).cloned().ok_or_else(|| malformed(format!("no 2-cell component at {f:?}")))
    }

    pub fn is_pseudo(&self) -> bool {
        self.inverses.is_some()
    }

    /// The declared domain and codomain of the component at `f`.
    pub fn component_type(&self, f: &S::C1) -> Result<(T::C1, T::C1)> {
        let t = &*self.source.target;
        let s = &*self.source.source;
        let (a, b) = (s.src1(f), s.tgt1(f));
        let (ca, cb) = (self.chi(&a)?, self.chi(&b)?);
        let (ff, gf) = (self.source.c1(f), self.target.c1(f));
        Ok(match self.kind {
            TransKind::Colax => (t.comp1(&cb, &ff)?, t.comp1(&gf, &ca)?),
            TransKind::Lax => (t.comp1(&gf, &ca)?, t.comp1(&cb, &ff)?),
        })
    }
}

impl<S: Finite2Cat, T: Strict2Cat> Transformation2<S, T> {
    /// The identity transformation on `f`.
    pub fn identity(f: Arc<Functor2<S, T>>, kind: TransKind, over: Structure) -> Self {
        let (s, t) = (&*f.source, &*f.target);
        let cells = Cells::of(s);
        let one_cells: BTreeMap<_, _> = cells.objs.iter().map(|a| (a.clone(), t.id1(&f.obj(a)))).collect();
        let two_cells: BTreeMap<_, _> = cells.one_cells().map(|x| (x.clone(), t.id2(&f.c1(x)))).collect();
        Transformation2 {
            kind,
            over,
            source: f.clone(),
            target: f,
            one_cells,
            inverses: Some(two_cells.clone()),
            two_cells,
        }
    }
}

fn same_functor<S: Strict2Cat, T: Strict2Cat>(a: &Arc<Functor2<S, T>>, b: &Arc<Functor2<S, T>>) -> bool {
    Arc::ptr_eq(a, b) || a.name == b.name
}

/// Evaluate the transformation axioms for the structure `over`, recording
/// them under `prefix`.
fn transformation_laws<S: Finite2Cat, T: Strict2Cat>(
    x: &Transformation2<S, T>,
    over: Structure,
    prefix: &str,
    cells: &Cells<S>,
    r: &mut Report,
) -> Result<()> {
    let (f, g) = (&*x.source, &*x.target);
    let (s, t) = (&*f.source, &*f.target);
    let law = |n: &str| if prefix.is_empty() { n.to_string() } else { format!("{prefix}.{n}") };
    let (nat, mult, unit) = (law("naturality"), law("multiplicativity"), law("unitality"));
    for l in [&nat, &mult, &unit] {
        r.declare(l);
    }
    let i1 = |c: &T::C1| t.id2(c);
    let fid = |y: &S::C1| t.id2(&f.c1(y));
    let gid = |y: &S::C1| t.id2(&g.c1(y));
    for (_, _, xs) in &cells.homs {
        for y in xs {
            for y2 in xs {
                for al in s.two_cells(y, y2)? {
                    let (a, b) = (s.src1(y), s.tgt1(y));
                    let (ca, cb) = (x.chi(&a)?, x.chi(&b)?);
                    let (lhs, rhs) = match x.kind {
                        TransKind::Colax => (
                            t.vc(&[x.cell(y2)?, t.hc(&[i1(&cb), f.c2(&al)])?]),
                            t.vc(&[t.hc(&[g.c2(&al), i1(&ca)])?, x.cell(y)?]),
                        ),
                        TransKind::Lax => (
                            t.vc(&[x.cell(y2)?, t.hc(&[g.c2(&al), i1(&ca)])?]),
                            t.vc(&[t.hc(&[i1(&cb), f.c2(&al)])?, x.cell(y)?]),
                        ),
                    };
                    r.check_eq(&nat, lhs, rhs, || s.show2(&al));
                }
            }
        }
    }
    for (gg, ff) in cells.pairs(s) {
        let (a, c) = (s.src1(&ff), s.tgt1(&gg));
        let (ca, cc) = (x.chi(&a)?, x.chi(&c)?);
        let gf = s.comp1(&gg, &ff)?;
        let (lhs, rhs) = match (x.kind, over) {
            (TransKind::Colax, Structure::Lax) => (
                t.vc(&[x.cell(&gf)?, t.hc(&[i1(&cc), f.mu(&gg, &ff)?])?]),
                t.vc(&[
                    t.hc(&[g.mu(&gg, &ff)?, i1(&ca)])?,
                    t.hc(&[gid(&gg), x.cell(&ff)?])?,
                    t.hc(&[x.cell(&gg)?, fid(&ff)])?,
                ]),
            ),
            (TransKind::Colax, Structure::Colax) => (
                t.vc(&[t.hc(&[g.delta(&gg, &ff)?, i1(&ca)])?, x.cell(&gf)?]),
                t.vc(&[
                    t.hc(&[gid(&gg), x.cell(&ff)?])?,
                    t.hc(&[x.cell(&gg)?, fid(&ff)])?,
                    t.hc(&[i1(&cc), f.delta(&gg, &ff)?])?,
                ]),
            ),
            (TransKind::Lax, Structure::Lax) => (
                t.vc(&[x.cell(&gf)?, t.hc(&[g.mu(&gg, &ff)?, i1(&ca)])?]),
                t.vc(&[
                    t.hc(&[i1(&cc), f.mu(&gg, &ff)?])?,
                    t.hc(&[x.cell(&gg)?, fid(&ff)])?,
                    t.hc(&[gid(&gg), x.cell(&ff)?])?,
                ]),
            ),
            (TransKind::Lax, Structure::Colax) => (
                t.vc(&[t.hc(&[i1(&cc), f.delta(&gg, &ff)?])?, x.cell(&gf)?]),
                t.vc(&[
                    t.hc(&[x.cell(&gg)?, fid(&ff)])?,
                    t.hc(&[gid(&gg), x.cell(&ff)?])?,
                    t.hc(&[g.delta(&gg, &ff)?, i1(&ca)])?,
                ]),
            ),
        };
        r.check_eq(&mult, lhs, rhs, || format!("({}, {})", s.show1(&gg), s.show1(&ff)));
    }
    for a in &cells.objs {
        let ca = x.chi(a)?;
        let ida = s.id1(a);
        let (lhs, rhs) = match (x.kind, over) {
            (TransKind::Colax, Structure::Lax) => {
                (t.vc(&[x.cell(&ida)?, t.hc(&[i1(&ca), f.eta(a)?])?]), t.hc(&[g.eta(a)?, i1(&ca)]))
            }
            (TransKind::Colax, Structure::Colax) => {
                (t.vc(&[t.hc(&[g.eps(a)?, i1(&ca)])?, x.cell(&ida)?]), t.hc(&[i1(&ca), f.eps(a)?]))
            }
            (TransKind::Lax, Structure::Lax) => {
                (t.vc(&[x.cell(&ida)?, t.hc(&[g.eta(a)?, i1(&ca)])?]), t.hc(&[i1(&ca), f.eta(a)?]))
            }
            (TransKind::Lax, Structure::Colax) => {
                (t.vc(&[t.hc(&[i1(&ca), f.eps(a)?])?, x.cell(&ida)?]), t.hc(&[g.eps(a)?, i1(&ca)]))
            }
        };
        r.check_eq(&unit, lhs, rhs, || s.show0(a));
    }
    Ok(())
}

/// Check a (co)lax transformation. When both functors are pseudo, the
/// axioms in terms of the other comparison structure are checked as well,
/// as a redundant cross-check under `derived.*`.
pub fn check_transformation2<S: Finite2Cat, T: Strict2Cat>(
    x: &Transformation2<S, T>,
    expected: TransKind,
) -> Result<Report> {
    if x.kind != expected {
        return Err(Error::KindMismatch(format!("expected a {expected:?} transformation, got {:?}", x.kind)));
    }
    let (f, g) = (&*x.source, &*x.target);
    let (s, t) = (&*f.source, &*f.target);
    let cells = Cells::of(s);
    for a in &cells.objs {
        x.chi(a)?;
    }
    for y in cells.one_cells() {
        x.cell(y)?;
    }
    let mut r = Report::new(format!("{:?} transformation {} ⇒ {}", x.kind, f.name, g.name));
    r.declare("typing");
    for a in &cells.objs {
        let c = x.chi(a)?;
        let ok = t.src1(&c) == f.obj(a) && t.tgt1(&c) == g.obj(a);
        r.check("typing", ok, || format!("1-cell at {}", s.show0(a)));
    }
    if !r.passed() {
        return Ok(r);
    }
    for y in cells.one_cells() {
        let (d, c) = x.component_type(y)?;
        let cell = x.cell(y)?;
        r.check("typing", t.dom2(&cell) == d && t.cod2(&cell) == c, || s.show1(y));
    }
    if !r.passed() {
        return Ok(r);
    }
    transformation_laws(x, x.over, "", &cells, &mut r)?;
    if let Some(inv) = &x.inverses {
        r.declare("inverses");
        for y in cells.one_cells() {
            let (c, i) = (x.cell(y)?, inv.get(y).cloned().ok_or_else(|| malformed("missing inverse"))?);
            let ok =
                t.vcomp(&i, &c).ok() == Some(t.id2(&t.dom2(&c))) && t.vcomp(&c, &i).ok() == Some(t.id2(&t.cod2(&c)));
            r.check("inverses", ok, || s.show1(y));
        }
    }
    if f.is_pseudo() && g.is_pseudo() {
        let other = match x.over {
            Structure::Lax => Structure::Colax,
            Structure::Colax => Structure::Lax,
        };
        let name = match other {
            Structure::Colax => "derived.colax-structure",
            Structure::Lax => "derived.lax-structure",
        };
        transformation_laws(x, other, name, &cells, &mut r)?;
    }
    Ok(r)
}

/// A modification: one 2-cell `a_A: χ_A ⇒ χ'_A` per 0-cell.
pub struct Modification2<S: Strict2Cat, T: Strict2Cat> {
    pub source: Arc<Transformation2<S, T>>,
    pub target: Arc<Transformation2<S, T>>,
    pub components: BTreeMap<S::Obj, T::C2>,
}

impl<S: Strict2Cat, T: Strict2Cat> Clone for Modification2<S, T> {
    fn clone(&self) -> Self {
        Modification2 { source: self.source.clone(), target: self.target.clone(), components: self.components.clone() }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> fmt::Debug for Modification2<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Modification2").field("components", &self.components).finish()
    }
}

impl<S: Strict2Cat, T: Strict2Cat> Modification2<S, T> {
    pub fn identity(x: Arc<Transformation2<S, T>>) -> Self {
        let t = &*x.source.target;
        let components = x.one_cells.iter().map(|(a, c)| (a.clone(), t.id2(c))).collect();
        Modification2 { source: x.clone(), target: x, components }
    }

    pub fn component(&self, a: &S::Obj) -> Result<T::C2> {
        self.components.get(a).cloned().ok_or_else(|| malformed(format!("no component at {a:?}")))
    }

    /// `self · first`, componentwise.
    pub fn after(&self, first: &Modification2<S, T>) -> Result<Self> {
        let t = &*self.source.source.target;
        let components = first
            .components
            .iter()
            .map(|(a, c)| Ok((a.clone(), t.vcomp(&self.component(a)?, c)?)))
            .collect::<Result<_>>()?;
        Ok(Modification2 { source: first.source.clone(), target: self.target.clone(), components })
    }
}

pub fn check_modification2<S: Finite2Cat, T: Strict2Cat>(m: &Modification2<S, T>) -> Result<Report> {
    let (x, y) = (&*m.source, &*m.target);
    if x.kind != y.kind {
        return Err(Error::KindMismatch("modification between transformations of different kinds".into()));
    }
    let (f, g) = (&*x.source, &*x.target);
    let (s, t) = (&*f.source, &*f.target);
    let cells = Cells::of(s);
    let mut r = Report::new("modification");
    r.declare("typing");
    r.declare("compatibility");
    for a in &cells.objs {
        let c = m.component(a)?;
        let ok = t.dom2(&c) == x.chi(a)? && t.cod2(&c) == y.chi(a)?;
        r.check("typing", ok, || s.show0(a));
    }
    if !r.passed() {
        return Ok(r);
    }
    for z in cells.one_cells() {
        let (a, b) = (s.src1(z), s.tgt1(z));
        let (ma, mb) = (m.component(&a)?, m.component(&b)?);
        let (fz, gz) = (t.id2(&f.c1(z)), t.id2(&g.c1(z)));
        let (lhs, rhs) = match x.kind {
            TransKind::Colax => (t.vc(&[y.cell(z)?, t.hc(&[mb, fz])?]), t.vc(&[t.hc(&[gz, ma])?, x.cell(z)?])),
            TransKind::Lax => (t.vc(&[t.hc(&[mb, fz])?, x.cell(z)?]), t.vc(&[y.cell(z)?, t.hc(&[gz, ma])?])),
        };
        r.check_eq("compatibility", lhs, rhs, || s.show1(z));
    }
    Ok(r)
}

/// Vertical composite `t2 · t1` of `t1: F ⇒ G` and `t2: G ⇒ H`.
pub fn vcompose_transformations<S: Finite2Cat, T: Strict2Cat>(
    t2: &Transformation2<S, T>,
    t1: &Transformation2<S, T>,
) -> Result<Transformation2<S, T>> {
    if t1.kind != t2.kind || t1.over != t2.over {
        return Err(Error::KindMismatch("vertical composite of transformations of different kinds".into()));
    }
    if !same_functor(&t1.target, &t2.source) {
        return Err(Error::NotComposable(format!("{} ≠ {}", t1.target.name, t2.source.name)));
    }
    let (s, t) = (&*t1.source.source, &*t1.source.target);
    let cells = Cells::of(s);
    let mut one_cells = BTreeMap::new();
    for a in &cells.objs {
        one_cells.insert(a.clone(), t.comp1(&t2.chi(a)?, &t1.chi(a)?)?);
    }
    let mut two_cells = BTreeMap::new();
    for z in cells.one_cells() {
        let (a, b) = (s.src1(z), s.tgt1(z));
        let c = match t1.kind {
            TransKind::Colax => {
                t.vc(&[t.hc(&[t2.cell(z)?, t.id2(&t1.chi(&a)?)])?, t.hc(&[t.id2(&t2.chi(&b)?), t1.cell(z)?])?])?
            }
            TransKind::Lax => {
                t.vc(&[t.hc(&[t.id2(&t2.chi(&b)?), t1.cell(z)?])?, t.hc(&[t2.cell(z)?, t.id2(&t1.chi(&a)?)])?])?
            }
        };
        two_cells.insert(z.clone(), c);
    }
    let inverses = match (&t1.inverses, &t2.inverses) {
        (Some(_), Some(_)) => {
            let mut inv = BTreeMap::new();
            for (z, c) in &two_cells {
                inv.insert(z.clone(), t.inverse2(c).ok_or_else(|| Error::Internal("composite of invertibles".into()))?);
            }
            Some(inv)
        }
        _ => None,
    };
    Ok(Transformation2 {
        kind: t1.kind,
        over: t1.over,
        source: t1.source.clone(),
        target: t2.target.clone(),
        one_cells,
        two_cells,
        inverses,
    })
}

/// Horizontal composite `θ' * θ: F'F ⇒ G'G` of colax transformations
/// `θ: F ⇒ G` and `θ': F' ⇒ G'`. The 2-cell components paste `F'²`,
/// `F'(θ_f)` and `F'^Δ`, so all four functors must be pseudo.
pub fn hcompose_transformations<A, B, C>(
    outer: &Transformation2<B, C>,
    inner: &Transformation2<A, B>,
) -> Result<Transformation2<A, C>>
where
    A: Finite2Cat + 'static,
    B: Strict2Cat + 'static,
    C: Strict2Cat + 'static,
{
    if inner.kind != TransKind::Colax || outer.kind != TransKind::Colax {
        return Err(Error::Unsupported("horizontal composition is implemented for colax transformations".into()));
    }
    if let Some(fun) = [inner.source.is_pseudo(), inner.target.is_pseudo()]
        .iter()
        .zip([&inner.source.name, &inner.target.name])
        .chain(
            [outer.source.is_pseudo(), outer.target.is_pseudo()].iter().zip([&outer.source.name, &outer.target.name]),
        )
        .find(|(p, _)| !**p)
        .map(|(_, n)| n)
    {
        return Err(Error::Precondition(format!(
            "horizontal composition consumes both the lax and the colax structure; {fun} is not pseudo"
        )));
    }
    let s = &*inner.source.source;
    let t = &*outer.source.target;
    let (f1, g1) = (&*outer.source, &*outer.target);
    let g = &*inner.target;
    let ff = Arc::new(compose_functors(f1, &inner.source));
    let gg = Arc::new(compose_functors(g1, &inner.target));
    let cells = Cells::of(s);
    let mut one_cells = BTreeMap::new();
    for a in &cells.objs {
        let c = t.comp1(&outer.chi(&g.obj(a))?, &f1.c1(&inner.chi(a)?))?;
        one_cells.insert(a.clone(), c);
    }
    let mut two_cells = BTreeMap::new();
    for z in cells.one_cells() {
        let (a, b) = (s.src1(z), s.tgt1(z));
        let (ta, tb) = (inner.chi(&a)?, inner.chi(&b)?);
        let (fz, gz) = (inner.source.c1(z), g.c1(z));
        // F'(θ_B)∘F'(F z) ⇒ F'(θ_B∘F z) ⇒ F'(G z∘θ_A) ⇒ F'(G z)∘F'(θ_A)
        let mid = t.vc(&[f1.delta(&gz, &ta)?, f1.c2(&inner.cell(z)?), f1.mu(&tb, &fz)?])?;
        let c =
            t.vc(&[t.hc(&[outer.cell(&gz)?, t.id2(&f1.c1(&ta))])?, t.hc(&[t.id2(&outer.chi(&g.obj(&b))?), mid])?])?;
        two_cells.insert(z.clone(), c);
    }
    let inverses = match (&inner.inverses, &outer.inverses) {
        (Some(_), Some(_)) => {
            let mut inv = BTreeMap::new();
            for (z, c) in &two_cells {
                inv.insert(z.clone(), t.inverse2(c).ok_or_else(|| Error::Internal("composite of invertibles".into()))?);
            }
            Some(inv)
        }
        _ => None,
    };
    Ok(Transformation2 {
        kind: TransKind::Colax,
        over: inner.over,
        source: ff,
        target: gg,
        one_cells,
        two_cells,
        inverses,
    })
}

/// The enumeration cap: `CATCENTER_MAX_CANDIDATES` or 2^24.
pub fn candidate_cap() -> u128 {
    std::env::var("CATCENTER_MAX_CANDIDATES").ok().and_then(|v| v.parse().ok()).unwrap_or(1 << 24)
}

/// Iterate over the cartesian product of candidate lists.
pub(crate) fn product<X: Clone>(lists: &[Vec<X>], mut visit: impl FnMut(&[X]) -> Result<()>) -> Result<()> {
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    let mut cur: Vec<X> = lists.iter().map(|l| l[0].clone()).collect();
    loop {
        visit(&cur)?;
        let mut i = lists.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                cur[i] = lists[i][idx[i]].clone();
                break;
            }
            idx[i] = 0;
            cur[i] = lists[i][0].clone();
        }
    }
}

pub(crate) fn check_cap(lists_len: impl Iterator<Item = usize>, what: &str) -> Result<()> {
    let total = lists_len.fold(1u128, |acc, n| acc.saturating_mul(n as u128));
    let cap = candidate_cap();
    if total > cap {
        return Err(Error::CapExceeded(format!("{total} candidate {what} exceed the cap of {cap}")));
    }
    Ok(())
}

/// All (co)lax transformations `F ⇒ G`, by brute force over every choice of
/// components followed by the checker. With `pseudo`, only those whose
/// 2-cell components are invertible are kept, with inverses attached.
pub fn enumerate_transformations<S: Finite2Cat, T: Finite2Cat>(
    f: &Arc<Functor2<S, T>>,
    g: &Arc<Functor2<S, T>>,
    kind: TransKind,
    over: Structure,
    pseudo: bool,
) -> Result<Vec<Transformation2<S, T>>> {
    let (s, t) = (&*f.source, &*f.target);
    let cells = Cells::of(s);
    let one: Vec<S::C1> = cells.one_cells().cloned().collect();
    let choices1: Vec<Vec<T::C1>> = cells.objs.iter().map(|a| t.one_cells(&f.obj(a), &g.obj(a))).collect();
    check_cap(choices1.iter().map(|c| c.len()), "1-cell components")?;
    let mut out = Vec::new();
    product(&choices1, |chis| {
        let one_cells: BTreeMap<_, _> = cells.objs.iter().cloned().zip(chis.iter().cloned()).collect();
        let probe = Transformation2 {
            kind,
            over,
            source: f.clone(),
            target: g.clone(),
            one_cells: one_cells.clone(),
            two_cells: BTreeMap::new(),
            inverses: None,
        };
        let mut lists = Vec::with_capacity(one.len());
        for z in &one {
            let (d, c) = probe.component_type(z)?;
            lists.push(t.two_cells(&d, &c)?);
        }
        check_cap(lists.iter().map(|c| c.len()), "2-cell components")?;
        product(&lists, |cs| {
            let two_cells: BTreeMap<_, _> = one.iter().cloned().zip(cs.iter().cloned()).collect();
            let mut cand = Transformation2 { two_cells, ..probe.clone() };
            if pseudo {
                let inv: Option<BTreeMap<_, _>> =
                    cand.two_cells.iter().map(|(z, c)| t.inverse2(c).map(|i| (z.clone(), i))).collect();
                match inv {
                    Some(inv) => cand.inverses = Some(inv),
                    None => return Ok(()),
                }
            }
            if check_transformation2(&cand, kind)?.passed() {
                out.push(cand);
            }
            Ok(())
        })
    })?;
    Ok(out)
}

/// All modifications between two parallel transformations.
pub fn enumerate_modifications<S: Finite2Cat, T: Finite2Cat>(
    x: &Arc<Transformation2<S, T>>,
    y: &Arc<Transformation2<S, T>>,
) -> Result<Vec<Modification2<S, T>>> {
    let s = &*x.source.source;
    let t = &*x.source.target;
    let objs = s.zero_cells();
    let lists: Vec<Vec<T::C2>> = objs.iter().map(|a| t.two_cells(&x.chi(a)?, &y.chi(a)?)).collect::<Result<_>>()?;
    check_cap(lists.iter().map(|c| c.len()), "modification components")?;
    let mut out = Vec::new();
    product(&lists, |cs| {
        let m = Modification2 {
            source: x.clone(),
            target: y.clone(),
            components: objs.iter().cloned().zip(cs.iter().cloned()).collect(),
        };
        if check_modification2(&m)?.passed() {
            out.push(m);
        }
        Ok(())
    })?;
    Ok(out)
}

/// The category of enumerated transformations `F ⇒ G` and modifications.
pub struct TransformationCategory<S: Strict2Cat, T: Strict2Cat> {
    pub category: FinCategory,
    pub objects: Vec<Arc<Transformation2<S, T>>>,
    pub morphisms: Vec<Modification2<S, T>>,
}

pub fn transformation_category<S: Finite2Cat, T: Finite2Cat>(
    f: &Arc<Functor2<S, T>>,
    g: &Arc<Functor2<S, T>>,
    kind: TransKind,
    over: Structure,
    pseudo: bool,
) -> Result<TransformationCategory<S, T>> {
    let objects: Vec<_> = enumerate_transformations(f, g, kind, over, pseudo)?.into_iter().map(Arc::new).collect();
    let mut morphisms = Vec::new();
    let mut ends = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            for m in enumerate_modifications(x, y)? {
                ends.push((i, j));
                morphisms.push(m);
            }
        }
    }
    let mut index: HashMap<(usize, usize, Vec<T::C2>), usize> = HashMap::new();
    for (k, (m, &(i, j))) in morphisms.iter().zip(&ends).enumerate() {
        index.insert((i, j, m.components.values().cloned().collect()), k);
    }
    let t = &*f.target;
    let identities: Vec<usize> = objects
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let comps: Vec<_> = x.one_cells.values().map(|c| t.id2(c)).collect();
            index.get(&(i, i, comps)).copied().ok_or_else(|| Error::Internal("identity modification missing".into()))
        })
        .collect::<Result<_>>()?;
    let names: Vec<String> = (0..objects.len()).map(|i| format!("t{i}")).collect();
    let mors: Vec<Morphism> =
        ends.iter().enumerate().map(|(k, &(i, j))| Morphism { name: format!("m{k}"), src: i, tgt: j }).collect();
    let failure = std::cell::Cell::new(None);
    let category = FinCategory::generate(names, mors, identities, |g2, f2| {
        let comp = morphisms[g2].after(&morphisms[f2]);
        let key = comp.map(|c| (ends[f2].0, ends[g2].1, c.components.values().cloned().collect::<Vec<_>>()));
        match key.ok().and_then(|k| index.get(&k).copied()) {
            Some(h) => h,
            None => {
                failure.set(Some((g2, f2)));
                f2
            }
        }
    })?;
    if let Some((g2, f2)) = failure.get() {
        return Err(Error::Internal(format!("modifications m{g2}·m{f2} leave the enumerated set")));
    }
    Ok(TransformationCategory { category, objects, morphisms })
}
