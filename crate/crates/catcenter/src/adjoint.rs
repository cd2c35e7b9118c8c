//! Adjoint 1-cells, autonomy, and what adjoints buy for centres: weak
//! half-braidings between pseudofunctors are invertible, and duals lift.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::center::{
    check_half_braiding, compose_center_objects, is_center_morphism, unit_object, xi_invert, HalfBraiding, Strength,
    Twist,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::twocat::{Finite2Cat, Functor2, Strict2Cat, TwoCat};
use crate::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Handedness {
    /// `u ⊣ f`: `η: id_A ⇒ u∘f`, `ε: f∘u ⇒ id_B`.
    Left,
    /// `f ⊣ u`: `η: id_B ⇒ f∘u`, `ε: u∘f ⇒ id_A`.
    Right,
}

/// `u` is a left or right adjoint of `f: A → B`.
pub struct Adjunction<K: Strict2Cat> {
    pub handedness: Handedness,
    pub f: K::C1,
    pub u: K::C1,
    pub unit: K::C2,
    pub counit: K::C2,
}

impl<K: Strict2Cat> Clone for Adjunction<K> {
    fn clone(&self) -> Self {
        Adjunction {
            handedness: self.handedness,
            f: self.f.clone(),
            u: self.u.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
        }
    }
}

impl<K: Strict2Cat> fmt::Debug for Adjunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Adjunction")
            .field("handedness", &self.handedness)
            .field("f", &self.f)
            .field("u", &self.u)
            .field("unit", &self.unit)
            .field("counit", &self.counit)
            .finish()
    }
}

impl<K: Strict2Cat> PartialEq for Adjunction<K> {
    fn eq(&self, o: &Self) -> bool {
        self.handedness == o.handedness
            && self.f == o.f
            && self.u == o.u
            && self.unit == o.unit
            && self.counit == o.counit
    }
}

/// The two snake composites, as (on f, on u). Each must be an identity.
fn snakes<K: Strict2Cat>(
    k: &K,
    h: Handedness,
    f: &K::C1,
    u: &K::C1,
    unit: &K::C2,
    counit: &K::C2,
) -> (Result<K::C2>, Result<K::C2>) {
    let (fi, ui) = (k.id2(f), k.id2(u));
    match h {
        Handedness::Left => (
            k.hc(&[fi.clone(), unit.clone()]).and_then(|a| k.vc(&[k.hc(&[counit.clone(), fi.clone()])?, a])),
            k.hc(&[unit.clone(), ui.clone()]).and_then(|a| k.vc(&[k.hc(&[ui.clone(), counit.clone()])?, a])),
        ),
        Handedness::Right => (
            k.hc(&[unit.clone(), fi.clone()]).and_then(|a| k.vc(&[k.hc(&[fi.clone(), counit.clone()])?, a])),
            k.hc(&[ui.clone(), unit.clone()]).and_then(|a| k.vc(&[k.hc(&[counit.clone(), ui.clone()])?, a])),
        ),
    }
}

pub fn check_adjunction<K: Strict2Cat>(k: &K, a: &Adjunction<K>) -> Report {
    let mut r = Report::new(format!("{:?} adjoint {} of {}", a.handedness, k.show1(&a.u), k.show1(&a.f)));
    r.declare("typing");
    r.declare("snake.f");
    r.declare("snake.u");
    let (src, tgt) = (k.src1(&a.f), k.tgt1(&a.f));
    let (uf, fu) = (k.comp1(&a.u, &a.f), k.comp1(&a.f, &a.u));
    let typed = k.src1(&a.u) == tgt
        && k.tgt1(&a.u) == src
        && match (a.handedness, uf, fu) {
            (Handedness::Left, Ok(uf), Ok(fu)) => {
                k.dom2(&a.unit) == k.id1(&src)
                    && k.cod2(&a.unit) == uf
                    && k.dom2(&a.counit) == fu
                    && k.cod2(&a.counit) == k.id1(&tgt)
            }
            (Handedness::Right, Ok(uf), Ok(fu)) => {
                k.dom2(&a.unit) == k.id1(&tgt)
                    && k.cod2(&a.unit) == fu
                    && k.dom2(&a.counit) == uf
                    && k.cod2(&a.counit) == k.id1(&src)
            }
            _ => false,
        };
    r.check("typing", typed, || "unit or counit has the wrong type".into());
    if typed {
        let (sf, su) = snakes(k, a.handedness, &a.f, &a.u, &a.unit, &a.counit);
        r.check_eq("snake.f", sf, Ok(k.id2(&a.f)), || k.show1(&a.f));
        r.check_eq("snake.u", su, Ok(k.id2(&a.u)), || k.show1(&a.u));
    }
    r
}

/// Every adjoint of `f` on the given side, by exhaustive search over
/// `(u, η, ε)`; `η` is fixed first and the snake on `f` is tested before the
/// one on `u`.
pub fn find_adjoint<K: Finite2Cat>(k: &K, f: &K::C1, h: Handedness) -> Result<Vec<Adjunction<K>>> {
    let (a, b) = (k.src1(f), k.tgt1(f));
    if !k.one_cells(&a, &b).contains(f) {
        return Err(Error::Malformed(format!("{} is not a 1-cell", k.show1(f))));
    }
    let mut out = Vec::new();
    for u in k.one_cells(&b, &a) {
        let (uf, fu) = (k.comp1(&u, f)?, k.comp1(f, &u)?);
        let (units, counits) = match h {
            Handedness::Left => (k.two_cells(&k.id1(&a), &uf)?, k.two_cells(&fu, &k.id1(&b))?),
            Handedness::Right => (k.two_cells(&k.id1(&b), &fu)?, k.two_cells(&uf, &k.id1(&a))?),
        };
        let (fi, ui) = (k.id2(f), k.id2(&u));
        for unit in &units {
            for counit in &counits {
                let (sf, su) = snakes(k, h, f, &u, unit, counit);
                if sf.ok() != Some(fi.clone()) || su.ok() != Some(ui.clone()) {
                    continue;
                }
                out.push(Adjunction {
                    handedness: h,
                    f: f.clone(),
                    u: u.clone(),
                    unit: unit.clone(),
                    counit: counit.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The canonical adjoints of an autonomous 2-category, or a 1-cell lacking one.
pub struct Autonomy<K: Strict2Cat> {
    pub left: BTreeMap<K::C1, Adjunction<K>>,
    pub right: BTreeMap<K::C1, Adjunction<K>>,
    pub witness: Option<(K::C1, Handedness)>,
}

impl<K: Strict2Cat> Autonomy<K> {
    pub fn autonomous(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_autonomous<K: Finite2Cat>(k: &K) -> Result<Autonomy<K>> {
    let mut out = Autonomy { left: BTreeMap::new(), right: BTreeMap::new(), witness: None };
    for f in k.all_one_cells() {
        for h in [Handedness::Left, Handedness::Right] {
            match find_adjoint(k, &f, h)?.into_iter().next() {
                Some(adj) => {
                    match h {
                        Handedness::Left => out.left.insert(f.clone(), adj),
                        Handedness::Right => out.right.insert(f.clone(), adj),
                    };
                }
                None => {
                    out.witness = Some((f, h));
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

fn require_pseudo<S: Strict2Cat, T: Strict2Cat>(f: &Functor2<S, T>) -> Result<()> {
    if f.is_lax() && f.is_colax() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} must be a pseudofunctor with both structures given", f.name)))
    }
}

/// `coev` transported along a pseudofunctor: `F^Δ · F(η) · F⁰`.
fn mapped_unit<S: Strict2Cat, T: Strict2Cat>(f: &Functor2<S, T>, a: &Adjunction<S>, src: &S::Obj) -> Result<T::C2> {
    let k = &*f.target;
    let (x, y) = match a.handedness {
        Handedness::Left => (&a.u, &a.f),
        Handedness::Right => (&a.f, &a.u),
    };
    k.vc(&[f.delta(x, y)?, f.c2(&a.unit), f.eta(src)?])
}

/// `ev` transported along a pseudofunctor: `F^ε · F(ε) · F²`.
fn mapped_counit<S: Strict2Cat, T: Strict2Cat>(f: &Functor2<S, T>, a: &Adjunction<S>, tgt: &S::Obj) -> Result<T::C2> {
    let k = &*f.target;
    let (x, y) = match a.handedness {
        Handedness::Left => (&a.f, &a.u),
        Handedness::Right => (&a.u, &a.f),
    };
    k.vc(&[f.eps(tgt)?, f.c2(&a.counit), f.mu(x, y)?])
}

/// The image of an adjunction under a pseudofunctor.
pub fn map_adjunction<S: Strict2Cat, T: Strict2Cat>(f: &Functor2<S, T>, a: &Adjunction<S>) -> Result<Adjunction<T>> {
    require_pseudo(f)?;
    let s = &*f.source;
    let (lo, hi) = (s.src1(&a.f), s.tgt1(&a.f));
    let (unit_at, counit_at) = match a.handedness {
        Handedness::Left => (lo, hi),
        Handedness::Right => (hi, lo),
    };
    Ok(Adjunction {
        handedness: a.handedness,
        f: f.c1(&a.f),
        u: f.c1(&a.u),
        unit: mapped_unit(f, a, &unit_at)?,
        counit: mapped_counit(f, a, &counit_at)?,
    })
}

/// Canonical left adjoints of every object of `E`, read in `Del(E)`.
pub fn domain_left_adjoints<K: Strict2Cat>(tw: &Twist<K>) -> Result<Vec<Adjunction<TwoCat>>> {
    let d = tw.domain();
    (0..tw.n_domain_objects())
        .map(|x| {
            let c = d.cell1(0, 0, x);
            find_adjoint(d, &c, Handedness::Left)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::Precondition(format!("{} has no left adjoint", d.show1(&c))))
        })
        .collect()
}

/// Upgrade a weak left half-braiding between pseudofunctors to a strong one:
/// `γ_X = (ev_{G(X)}∘1_M∘1_{F(X)}) · (1_{G(X)}∘χ_{X*}∘1_{F(X)}) · (1_{G(X)}∘1_M∘coev_{F(X)})`,
/// with `X*` the left adjoint of `X` given in `adjoints[X]`.
pub fn invert_half_braiding_via_adjoints<K: Strict2Cat>(
    h: &HalfBraiding<K>,
    adjoints: &[Adjunction<TwoCat>],
) -> Result<HalfBraiding<K>> {
    if h.side != Side::Left {
        return Err(Error::Unsupported("adjoint inversion is stated for left half-braidings".into()));
    }
    let tw = &h.twist;
    require_pseudo(&tw.f)?;
    require_pseudo(&tw.g)?;
    let n = tw.n_domain_objects();
    if adjoints.len() != n {
        return Err(Error::Precondition(format!("{} adjunctions for {n} objects", adjoints.len())));
    }
    let k = &*tw.f.target;
    let d = tw.domain();
    let im = k.id2(&h.carrier);
    let mut inverses = Vec::with_capacity(n);
    for (x, adj) in adjoints.iter().enumerate() {
        if adj.handedness != Handedness::Left || adj.f != d.cell1(0, 0, x) {
            return Err(Error::Precondition(format!("adjunction {x} is not a left adjunction of object {x}")));
        }
        let coev = mapped_unit(&tw.f, adj, &0)?;
        let ev = mapped_counit(&tw.g, adj, &0)?;
        let (gx, fx) = (k.id2(&tw.g.c1(&adj.f)), k.id2(&tw.f.c1(&adj.f)));
        let chi_star = &h.components[adj.u.idx];
        let gamma = k.vc(&[
            k.hc(&[ev, im.clone(), fx.clone()])?,
            k.hc(&[gx.clone(), chi_star.clone(), fx])?,
            k.hc(&[gx, im.clone(), coev])?,
        ])?;
        let chi = &h.components[x];
        let left = k.vcomp(&gamma, chi)?;
        let right = k.vcomp(chi, &gamma)?;
        if left != k.id2(&k.dom2(chi)) || right != k.id2(&k.cod2(chi)) {
            return Err(Error::Internal(format!("γ at object {x} is not inverse to the half-braiding")));
        }
        inverses.push(gamma);
    }
    Ok(HalfBraiding {
        side: Side::Left,
        strength: Strength::Strong,
        twist: tw.clone(),
        carrier: h.carrier.clone(),
        components: h.components.clone(),
        inverses: Some(inverses),
    })
}

/// A dual of a centre object together with the checks that the adjunction
/// 2-cells are centre morphisms.
pub struct DualLift<K: Strict2Cat> {
    pub dual: HalfBraiding<K>,
    pub report: Report,
}

/// Lift an adjoint `u` of the carrier of a strong left half-braiding over
/// `(F, G)` to a half-braiding over `(G, F)`.
///
/// For a right adjoint `v`:
/// `σ_X = (ε̄∘1_{F(X)}∘1_v) · (1_v∘χ_X⁻¹∘1_v) · (1_v∘1_{G(X)}∘η̄)`.
/// For a left adjoint the mirror pasting
/// `(1_u∘1_{G(X)}∘ε) · (1_u∘χ_X∘1_u) · (η∘1_{F(X)}∘1_u)` is a right
/// half-braiding, which is inverted.
pub fn lift_dual_to_center<K: Strict2Cat>(h: &HalfBraiding<K>, adj: &Adjunction<K>) -> Result<DualLift<K>> {
    if h.side != Side::Left {
        return Err(Error::Unsupported("duals are lifted for left half-braidings".into()));
    }
    let inv = match (&h.strength, &h.inverses) {
        (Strength::Strong, Some(inv)) => inv,
        _ => return Err(Error::Precondition("lifting a dual needs a strong half-braiding".into())),
    };
    let tw = &h.twist;
    let k = &*tw.f.target;
    if adj.f != h.carrier {
        return Err(Error::Precondition(format!("adjunction is not for the carrier {}", k.show1(&h.carrier))));
    }
    let iu = k.id2(&adj.u);
    let dual_twist = Twist { f: tw.g.clone(), g: tw.f.clone() };
    let n = tw.n_domain_objects();
    let cell = |x: usize| tw.domain().cell1(0, 0, x);
    let dual = match adj.handedness {
        Handedness::Right => {
            let components = (0..n)
                .map(|x| {
                    let (fx, gx) = (k.id2(&tw.f.c1(&cell(x))), k.id2(&tw.g.c1(&cell(x))));
                    k.vc(&[
                        k.hc(&[adj.counit.clone(), fx, iu.clone()])?,
                        k.hc(&[iu.clone(), inv[x].clone(), iu.clone()])?,
                        k.hc(&[iu.clone(), gx, adj.unit.clone()])?,
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            let inverses: Option<Vec<_>> = components.iter().map(|c| k.inverse2(c)).collect();
            HalfBraiding {
                side: Side::Left,
                strength: if inverses.is_some() { Strength::Strong } else { Strength::Weak },
                twist: dual_twist,
                carrier: adj.u.clone(),
                components,
                inverses,
            }
        }
        Handedness::Left => {
            let components = (0..n)
                .map(|x| {
                    let (fx, gx) = (k.id2(&tw.f.c1(&cell(x))), k.id2(&tw.g.c1(&cell(x))));
                    k.vc(&[
                        k.hc(&[iu.clone(), gx, adj.counit.clone()])?,
                        k.hc(&[iu.clone(), h.components[x].clone(), iu.clone()])?,
                        k.hc(&[adj.unit.clone(), fx, iu.clone()])?,
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            let inverses = components
                .iter()
                .map(|c| k.inverse2(c))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Internal("mirrored dual braiding is not invertible".into()))?;
            let right = HalfBraiding {
                side: Side::Right,
                strength: Strength::Strong,
                twist: dual_twist,
                carrier: adj.u.clone(),
                components,
                inverses: Some(inverses),
            };
            xi_invert(&right)?
        }
    };
    let mut report = Report::new(format!("dual of {}", k.show1(&h.carrier)));
    report.absorb("half-braiding", check_half_braiding(&dual)?);
    // the composites over (F, F) and (G, G), and the matching units
    let (over_f, over_g) = (compose_center_objects(&dual, h)?, compose_center_objects(h, &dual)?);
    let unit_f = unit_object(&over_f.twist, Side::Left)?;
    let unit_g = unit_object(&over_g.twist, Side::Left)?;
    report.declare("unit.center-morphism");
    report.declare("counit.center-morphism");
    match adj.handedness {
        Handedness::Right => {
            // η̄: id_b ⇒ M∘v over (G, G), ε̄: v∘M ⇒ id_a over (F, F)
            report.check("unit.center-morphism", is_center_morphism(&unit_g, &over_g, &adj.unit)?, || "η̄".into());
            report.check("counit.center-morphism", is_center_morphism(&over_f, &unit_f, &adj.counit)?, || "ε̄".into());
        }
        Handedness::Left => {
            // η: id_a ⇒ u∘M over (F, F), ε: M∘u ⇒ id_b over (G, G)
            report.check("unit.center-morphism", is_center_morphism(&unit_f, &over_f, &adj.unit)?, || "η".into());
            report.check("counit.center-morphism", is_center_morphism(&over_g, &unit_g, &adj.counit)?, || "ε".into());
        }
    }
    Ok(DualLift { dual, report })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::center::enumerate_center;
    use crate::moncat::LaxMonFunctor;
    use crate::suite;
    use crate::twocat::deloop_moncat;

    #[test]
    fn identity_is_its_own_adjoint() {
        let k = TwoCat::trivial();
        for h in [Handedness::Left, Handedness::Right] {
            let adj = find_adjoint(&k, &k.cell1(0, 0, 0), h).unwrap();
            assert_eq!(adj.len(), 1);
            assert_eq!(adj[0].u, adj[0].f);
            assert!(check_adjunction(&k, &adj[0]).passed());
        }
    }

    #[test]
    fn group_adjoints_are_inverses() {
        let m = suite::s3();
        let k = deloop_moncat(&m);
        for x in 0..6 {
            let adj = find_adjoint(&k, &k.cell1(0, 0, x), Handedness::Left).unwrap();
            assert_eq!(adj.len(), 1);
            assert_eq!(m.tensor(adj[0].u.idx, x), m.unit());
        }
        assert!(is_autonomous(&k).unwrap().autonomous());
    }

    #[test]
    fn poset_top_has_no_adjoint() {
        let k = deloop_moncat(&suite::poset_max());
        let one = k.cell1(0, 0, 1);
        assert!(find_adjoint(&k, &one, Handedness::Left).unwrap().is_empty());
        let a = is_autonomous(&k).unwrap();
        assert_eq!(a.witness.map(|w| w.0), Some(one));
    }

    #[test]
    fn broken_snake_is_reported() {
        let k = deloop_moncat(&suite::cyclic(2));
        let mut adj = find_adjoint(&k, &k.cell1(0, 0, 1), Handedness::Right).unwrap().remove(0);
        adj.u = k.cell1(0, 0, 0);
        assert!(!check_adjunction(&k, &adj).passed());
    }

    #[test]
    fn weak_centre_upgrades_in_s3() {
        let m = Arc::new(suite::s3());
        let id = LaxMonFunctor::identity(m);
        let (_, tw) = Twist::regular(&id, &id).unwrap();
        let adjs = domain_left_adjoints(&tw).unwrap();
        let weak = enumerate_center(&tw, Side::Left, Strength::Weak).unwrap();
        let strong = enumerate_center(&tw, Side::Left, Strength::Strong).unwrap();
        let up: Vec<_> = weak.objects.iter().map(|h| invert_half_braiding_via_adjoints(h, &adjs).unwrap()).collect();
        assert_eq!(up, strong.objects);
        for u in &up {
            assert!(check_half_braiding(&xi_invert(u).unwrap()).unwrap().passed());
        }
    }

    #[test]
    fn duals_in_cyclic_group() {
        let m = Arc::new(suite::cyclic(4));
        let id = LaxMonFunctor::identity(m.clone());
        let (k, tw) = Twist::regular(&id, &id).unwrap();
        let z = enumerate_center(&tw, Side::Left, Strength::Strong).unwrap();
        for h in &z.objects {
            for hand in [Handedness::Left, Handedness::Right] {
                let adj = find_adjoint(&*k, &h.carrier, hand).unwrap().remove(0);
                let d = lift_dual_to_center(h, &adj).unwrap();
                assert!(d.report.passed(), "{:?}", d.report.failed_laws());
                assert_eq!(m.tensor(d.dual.carrier.idx, h.carrier.idx), 0);
            }
        }
    }
}
