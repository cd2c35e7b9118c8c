//! Yang-Baxter operators on 2-functors, bilax functors, bilax natural
//! transformations and modifications, and the translations between bilax
//! structure out of the trivial 2-category, bimonads, and mixed
//! distributive laws.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::bimonad::{
    check_comodule_monad, check_comonad, check_hopf_bimodule, check_hopf_morphism, check_lambda, check_module_comonad,
    check_monad, check_nu_bimonad, check_relative_module, check_yd_module, induced_comodule, induced_module,
    lambda_unchecked, push_comonad, push_monad, Bimonad, ComoduleStructure, HopfBimodule, Lambda, ModuleStructure,
    YdModule,
};
use crate::error::{Error, Result};
use crate::moncat::{MatBackend, Matrix, Ybo1};
use crate::report::Report;
use crate::twocat::{
    check_lax_functor2, check_modification2, check_transformation2, compose_functors, deloop_moncat,
    vcompose_transformations, Cell1, ColaxStructure, Finite2Cat, Functor2, LaxStructure, Modification2, Strict2Cat,
    Structure, TransKind, Transformation2, TwoCat,
};
use crate::Side;

/// `ν_{g,f}: F(g)∘F(f) ⇒ F(f)∘F(g)` on pairs of endo-1-cells of one 0-cell.
pub type NuFn<S, T> =
    Arc<dyn Fn(&<S as Strict2Cat>::C1, &<S as Strict2Cat>::C1) -> Result<<T as Strict2Cat>::C2> + Send + Sync>;

/// A functor carrying both a lax and a colax structure, with a Yang-Baxter
/// operator. `compatible` declares that `ν` agrees with the target's own
/// Yang-Baxter cells on images; the checker verifies the declaration.
pub struct BilaxFunctor<S: Strict2Cat, T: Strict2Cat> {
    pub functor: Arc<Functor2<S, T>>,
    pub nu: NuFn<S, T>,
    pub compatible: bool,
}

impl<S: Strict2Cat, T: Strict2Cat> Clone for BilaxFunctor<S, T> {
    fn clone(&self) -> Self {
        BilaxFunctor { functor: self.functor.clone(), nu: self.nu.clone(), compatible: self.compatible }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> fmt::Debug for BilaxFunctor<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilaxFunctor").field("functor", &self.functor).field("compatible", &self.compatible).finish()
    }
}

impl<S: Strict2Cat, T: Strict2Cat> BilaxFunctor<S, T> {
    pub fn name(&self) -> &str {
        &self.functor.name
    }

    pub fn nu(&self, g: &S::C1, f: &S::C1) -> Result<T::C2> {
        let s = &*self.functor.source;
        if !s.is_endo(g) || !s.is_endo(f) || s.src1(g) != s.src1(f) {
            return Err(Error::Malformed(format!(
                "ν is indexed by endo-1-cells of one 0-cell, not ({}, {})",
                s.show1(g),
                s.show1(f)
            )));
        }
        (self.nu)(g, f)
    }

    /// `λ_{xy,z} = (μ_{x,z}∘1_{Fy})·(1_{Fx}∘ν_{y,z})·(Δ_{x,y}∘1_{Fz})` for
    /// `y, z` endo on `A` and `x` leaving `A`.
    pub fn lambda(&self, x: &S::C1, y: &S::C1, z: &S::C1) -> Result<T::C2> {
        let (f, t) = (&*self.functor, &*self.functor.target);
        t.vc(&[
            t.hc(&[f.mu(x, z)?, t.id2(&f.c1(y))])?,
            t.hc(&[t.id2(&f.c1(x)), self.nu(y, z)?])?,
            t.hc(&[f.delta(x, y)?, t.id2(&f.c1(z))])?,
        ])
    }
}

fn same_bilax<S: Strict2Cat, T: Strict2Cat>(a: &Arc<BilaxFunctor<S, T>>, b: &Arc<BilaxFunctor<S, T>>) -> bool {
    Arc::ptr_eq(a, b) || a.name() == b.name()
}

fn require_bilax<S: Strict2Cat, T: Strict2Cat>(f: &Functor2<S, T>) -> Result<()> {
    if f.is_lax() && f.is_colax() {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!("{} lacks a lax or a colax structure", f.name)))
    }
}

/// Endo-1-cells of each 0-cell.
fn endos<S: Finite2Cat>(s: &S) -> Vec<(S::Obj, Vec<S::C1>)> {
    s.zero_cells().into_iter().map(|a| (a.clone(), s.one_cells(&a, &a))).collect()
}

fn into_of<S: Finite2Cat>(s: &S, b: &S::Obj) -> Vec<S::C1> {
    s.zero_cells().iter().flat_map(|a| s.one_cells(a, b)).collect()
}

fn out_of<S: Finite2Cat>(s: &S, b: &S::Obj) -> Vec<S::C1> {
    s.zero_cells().iter().flat_map(|c| s.one_cells(b, c)).collect()
}

/// Typing, naturality in both slots, the Yang-Baxter equation, and
/// unity-counity.
pub fn check_ybo<S: Finite2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>) -> Result<Report> {
    require_bilax(&fb.functor)?;
    let (f, s, t) = (&*fb.functor, &*fb.functor.source, &*fb.functor.target);
    let fid = |x: &S::C1| t.id2(&f.c1(x));
    let mut r = Report::new(format!("Yang-Baxter operator of {}", f.name));
    for law in ["ybo.naturality", "ybe", "yb-unity"] {
        r.declare(law);
    }
    for (a, xs) in endos(s) {
        for g in &xs {
            for h in &xs {
                let c = fb.nu(g, h)?;
                let (fg, fh) = (f.c1(g), f.c1(h));
                if t.dom2(&c) != t.comp1(&fg, &fh)? || t.cod2(&c) != t.comp1(&fh, &fg)? {
                    return Err(Error::Malformed(format!("ν at ({}, {}) is ill-typed", s.show1(g), s.show1(h))));
                }
            }
        }
        for g in &xs {
            for g2 in &xs {
                for al in s.two_cells(g, g2)? {
                    for h in &xs {
                        for h2 in &xs {
                            for be in s.two_cells(h, h2)? {
                                r.check_eq(
                                    "ybo.naturality",
                                    ev!(t.vcomp(&fb.nu(g2, h2)?, &t.hcomp(&f.c2(&al), &f.c2(&be))?)?),
                                    ev!(t.vcomp(&t.hcomp(&f.c2(&be), &f.c2(&al))?, &fb.nu(g, h)?)?),
                                    || format!("({}, {})", s.show2(&al), s.show2(&be)),
                                );
                            }
                        }
                    }
                }
            }
        }
        for h in &xs {
            for g in &xs {
                for x in &xs {
                    // (h, g, x) plays (h, g, f)
                    r.check_eq(
                        "ybe",
                        ev!(t.vc(&[
                            t.hc(&[fb.nu(g, x)?, fid(h)])?,
                            t.hc(&[fid(g), fb.nu(h, x)?])?,
                            t.hc(&[fb.nu(h, g)?, fid(x)])?,
                        ])?),
                        ev!(t.vc(&[
                            t.hc(&[fid(x), fb.nu(h, g)?])?,
                            t.hc(&[fb.nu(h, x)?, fid(g)])?,
                            t.hc(&[fid(h), fb.nu(g, x)?])?,
                        ])?),
                        || format!("({}, {}, {})", s.show1(h), s.show1(g), s.show1(x)),
                    );
                }
            }
        }
        let id = s.id1(&a);
        for x in &xs {
            let w = || s.show1(x);
            r.check_eq(
                "yb-unity",
                ev!(t.vc(&[t.hc(&[fid(x), f.eps(&a)?])?, fb.nu(&id, x)?, t.hc(&[f.eta(&a)?, fid(x)])?])?),
                Ok(fid(x)),
                w,
            );
            r.check_eq(
                "yb-unity",
                ev!(t.vc(&[t.hc(&[f.eps(&a)?, fid(x)])?, fb.nu(x, &id)?, t.hc(&[fid(x), f.eta(&a)?])?])?),
                Ok(fid(x)),
                w,
            );
        }
    }
    Ok(r)
}

/// Every equation family of a bilax functor, each reported separately:
/// the underlying lax and colax functor laws (`functor.*`), the
/// Yang-Baxter laws, the lax and colax distributive laws with their
/// (co)unit parts, the bilaxity condition with its unit and counit parts,
/// the derived unit identity `derived.eps-e`, and, when declared,
/// compatibility with the target's Yang-Baxter cells.
pub fn check_bilax_functor<S: Finite2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>) -> Result<Report> {
    require_bilax(&fb.functor)?;
    let (f, s, t) = (&*fb.functor, &*fb.functor.source, &*fb.functor.target);
    let fid = |x: &S::C1| t.id2(&f.c1(x));
    let mut r = Report::new(format!("bilax functor {}", f.name));
    r.absorb("functor", check_lax_functor2(f)?);
    r.absorb("", check_ybo(fb)?);
    let families = [
        "lax-dl.left",
        "lax-dl.left-unit",
        "lax-dl.right",
        "lax-dl.right-unit",
        "colax-dl.left",
        "colax-dl.left-counit",
        "colax-dl.right",
        "colax-dl.right-counit",
        "bilax",
        "bilax.units",
        "bilax.counits",
        "bilax.unit-counit",
        "derived.eps-e",
    ];
    for law in families {
        r.declare(law);
    }
    for (a, xs) in endos(s) {
        let id = s.id1(&a);
        for h in &xs {
            for g in &xs {
                for x in &xs {
                    let w = || format!("({}, {}, {})", s.show1(h), s.show1(g), s.show1(x));
                    let hg = s.comp1(h, g)?;
                    let gx = s.comp1(g, x)?;
                    r.check_eq(
                        "lax-dl.left",
                        ev!(t.vcomp(&fb.nu(&hg, x)?, &t.hcomp(&f.mu(h, g)?, &fid(x))?)?),
                        ev!(t.vc(&[
                            t.hc(&[fid(x), f.mu(h, g)?])?,
                            t.hc(&[fb.nu(h, x)?, fid(g)])?,
                            t.hc(&[fid(h), fb.nu(g, x)?])?,
                        ])?),
                        w,
                    );
                    r.check_eq(
                        "lax-dl.right",
                        ev!(t.vcomp(&fb.nu(h, &gx)?, &t.hcomp(&fid(h), &f.mu(g, x)?)?)?),
                        ev!(t.vc(&[
                            t.hc(&[f.mu(g, x)?, fid(h)])?,
                            t.hc(&[fid(g), fb.nu(h, x)?])?,
                            t.hc(&[fb.nu(h, g)?, fid(x)])?,
                        ])?),
                        w,
                    );
                    r.check_eq(
                        "colax-dl.left",
                        ev!(t.vcomp(&t.hcomp(&f.delta(h, g)?, &fid(x))?, &fb.nu(x, &hg)?)?),
                        ev!(t.vc(&[
                            t.hc(&[fid(h), fb.nu(x, g)?])?,
                            t.hc(&[fb.nu(x, h)?, fid(g)])?,
                            t.hc(&[fid(x), f.delta(h, g)?])?,
                        ])?),
                        w,
                    );
                    r.check_eq(
                        "colax-dl.right",
                        ev!(t.vcomp(&t.hcomp(&fid(h), &f.delta(g, x)?)?, &fb.nu(&gx, h)?)?),
                        ev!(t.vc(&[
                            t.hc(&[fb.nu(g, h)?, fid(x)])?,
                            t.hc(&[fid(g), fb.nu(x, h)?])?,
                            t.hc(&[f.delta(g, x)?, fid(h)])?,
                        ])?),
                        w,
                    );
                }
            }
        }
        let (u, cu) = (f.eta(&a)?, f.eps(&a)?);
        for x in &xs {
            let w = || s.show1(x);
            r.check_eq(
                "lax-dl.left-unit",
                ev!(t.vcomp(&fb.nu(&id, x)?, &t.hcomp(&u, &fid(x))?)?),
                ev!(t.hcomp(&fid(x), &u)?),
                w,
            );
            r.check_eq(
                "lax-dl.right-unit",
                ev!(t.vcomp(&fb.nu(x, &id)?, &t.hcomp(&fid(x), &u)?)?),
                ev!(t.hcomp(&u, &fid(x))?),
                w,
            );
            r.check_eq(
                "colax-dl.left-counit",
                ev!(t.vcomp(&t.hcomp(&cu, &fid(x))?, &fb.nu(x, &id)?)?),
                ev!(t.hcomp(&fid(x), &cu)?),
                w,
            );
            r.check_eq(
                "colax-dl.right-counit",
                ev!(t.vcomp(&t.hcomp(&fid(x), &cu)?, &fb.nu(&id, x)?)?),
                ev!(t.hcomp(&cu, &fid(x))?),
                w,
            );
        }
        let wa = || s.show0(&a);
        r.check_eq("bilax.units", ev!(t.hcomp(&u, &u)?), ev!(t.vcomp(&f.delta(&id, &id)?, &u)?), wa);
        r.check_eq("bilax.counits", ev!(t.hcomp(&cu, &cu)?), ev!(t.vcomp(&cu, &f.mu(&id, &id)?)?), wa);
        r.check_eq("bilax.unit-counit", ev!(t.vcomp(&cu, &u)?), Ok(t.id2(&t.id1(&f.obj(&a)))), wa);
        let one = fid(&id);
        let middle = t.vcomp(&u, &cu);
        r.check_eq(
            "derived.eps-e",
            ev!(t.vc(&[t.hc(&[cu.clone(), one.clone()])?, fb.nu(&id, &id)?, t.hc(&[u.clone(), one.clone()])?])?),
            middle.clone(),
            wa,
        );
        r.check_eq(
            "derived.eps-e",
            ev!(t.vc(&[t.hc(&[one.clone(), cu.clone()])?, fb.nu(&id, &id)?, t.hc(&[one.clone(), u.clone()])?])?),
            middle,
            wa,
        );
        // bilaxity: k: A'→a, h, x endo on a, g: a→C
        let (ks, gs) = (into_of(s, &a), out_of(s, &a));
        for k in &ks {
            for h in &xs {
                for x in &xs {
                    for g in &gs {
                        let w = || format!("(k={}, h={}, f={}, g={})", s.show1(k), s.show1(h), s.show1(x), s.show1(g));
                        let lhs = ev!(t.vc(&[
                            t.hc(&[f.mu(g, h)?, f.mu(x, k)?])?,
                            t.hc(&[fid(g), fb.nu(x, h)?, fid(k)])?,
                            t.hc(&[f.delta(g, x)?, f.delta(h, k)?])?,
                        ])?);
                        let rhs = ev!({
                            let c = s.ybo(x, h).ok_or_else(|| {
                                Error::Unsupported(format!(
                                    "the source declares no Yang-Baxter cell on ({}, {})",
                                    s.show1(x),
                                    s.show1(h)
                                ))
                            })?;
                            let mid = s.hc(&[s.id2(g), c, s.id2(k)])?;
                            t.vc(&[
                                f.delta(&s.comp1(g, h)?, &s.comp1(x, k)?)?,
                                f.c2(&mid),
                                f.mu(&s.comp1(g, x)?, &s.comp1(h, k)?)?,
                            ])?
                        });
                        if let Err(e @ Error::Unsupported(_)) = &rhs {
                            return Err(e.clone());
                        }
                        r.check_eq("bilax", lhs, rhs, w);
                    }
                }
            }
        }
    }
    if fb.compatible {
        r.declare("compatibility");
        for (_, xs) in endos(s) {
            for g in &xs {
                for h in &xs {
                    let own = t.ybo(&f.c1(g), &f.c1(h));
                    r.check("compatibility", own.as_ref() == Some(&fb.nu(g, h)?), || {
                        format!("({}, {})", s.show1(g), s.show1(h))
                    });
                }
            }
        }
    }
    Ok(r)
}

/// The four identities that follow from bilaxity with an identity plugged
/// in: for `k` into `B`, `f, h` endo on `B` and `g` out of `B`,
/// `F(f)` is a module coalgebra and a comodule algebra over `F(id_B)` on
/// each side.
pub fn check_bilax_consequences<S: Finite2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>) -> Result<Report> {
    require_bilax(&fb.functor)?;
    let (f, s, t) = (&*fb.functor, &*fb.functor.source, &*fb.functor.target);
    let fid = |x: &S::C1| t.id2(&f.c1(x));
    let mut r = Report::new(format!("consequences of bilaxity for {}", f.name));
    let names = ["mod-coalg.left", "comod-alg.left", "mod-coalg.right", "comod-alg.right"];
    for law in names {
        r.declare(law);
    }
    for (b, xs) in endos(s) {
        let id = s.id1(&b);
        for x in &xs {
            for k in into_of(s, &b) {
                let w = || format!("({}, {})", s.show1(x), s.show1(&k));
                let xk = s.comp1(x, &k)?;
                r.check_eq(
                    names[0],
                    ev!(t.vc(&[
                        t.hc(&[f.mu(&id, x)?, f.mu(&id, &k)?])?,
                        t.hc(&[fid(&id), fb.nu(&id, x)?, fid(&k)])?,
                        t.hc(&[f.delta(&id, &id)?, f.delta(x, &k)?])?,
                    ])?),
                    ev!(t.vcomp(&f.delta(x, &k)?, &f.mu(&id, &xk)?)?),
                    w,
                );
                r.check_eq(
                    names[1],
                    ev!(t.vc(&[
                        t.hc(&[f.mu(&id, &id)?, f.mu(x, &k)?])?,
                        t.hc(&[fid(&id), fb.nu(x, &id)?, fid(&k)])?,
                        t.hc(&[f.delta(&id, x)?, f.delta(&id, &k)?])?,
                    ])?),
                    ev!(t.vcomp(&f.delta(&id, &xk)?, &f.mu(x, &k)?)?),
                    w,
                );
            }
            for g in out_of(s, &b) {
                let w = || format!("({}, {})", s.show1(&g), s.show1(x));
                let gx = s.comp1(&g, x)?;
                r.check_eq(
                    names[2],
                    ev!(t.vc(&[
                        t.hc(&[f.mu(&g, &id)?, f.mu(x, &id)?])?,
                        t.hc(&[fid(&g), fb.nu(x, &id)?, fid(&id)])?,
                        t.hc(&[f.delta(&g, x)?, f.delta(&id, &id)?])?,
                    ])?),
                    ev!(t.vcomp(&f.delta(&g, x)?, &f.mu(&gx, &id)?)?),
                    w,
                );
                r.check_eq(
                    names[3],
                    ev!(t.vc(&[
                        t.hc(&[f.mu(&g, x)?, f.mu(&id, &id)?])?,
                        t.hc(&[fid(&g), fb.nu(&id, x)?, fid(&id)])?,
                        t.hc(&[f.delta(&g, &id)?, f.delta(x, &id)?])?,
                    ])?),
                    ev!(t.vcomp(&f.delta(&gx, &id)?, &f.mu(&g, x)?)?),
                    w,
                );
            }
        }
    }
    Ok(r)
}

/// `ν` looked up by images: the first pair of endo-1-cells of `A` (in
/// enumeration order) whose images are the requested target 1-cells.
pub fn nu_on_images<'a, S: Finite2Cat, T: Strict2Cat>(
    fb: &'a BilaxFunctor<S, T>,
    a: &S::Obj,
) -> impl Fn(&T::C1, &T::C1) -> Result<T::C2> + 'a {
    let s = &*fb.functor.source;
    let xs = s.one_cells(a, a);
    move |p, q| {
        for g in &xs {
            for h in &xs {
                if fb.functor.c1(g) == *p && fb.functor.c1(h) == *q {
                    return fb.nu(g, h);
                }
            }
        }
        Err(Error::Precondition("no endo-1-cells with these images".into()))
    }
}

/// `F(id_A)` with `μ_{id,id}`, `F⁰`, `Δ_{id,id}`, `F^ε` and `ν_{id,id}`.
pub fn unit_bimonad<S: Strict2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>, a: &S::Obj) -> Result<Bimonad<T>> {
    push_bimonad(fb, &Bimonad::identity(&*fb.functor.source, a))
}

/// `F(x)` for an endo-1-cell `x` of `A` with its four (co)actions of
/// `F(id_A)`: `μ_{id,x}`, `μ_{x,id}`, `Δ_{id,x}`, `Δ_{x,id}`.
pub fn hopf_bimodule_of<S: Strict2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>, x: &S::C1) -> Result<HopfBimodule<T>> {
    let (f, s) = (&*fb.functor, &*fb.functor.source);
    let id = s.id1(&s.src1(x));
    Ok(HopfBimodule {
        carrier: f.c1(x),
        left_action: f.mu(&id, x)?,
        right_action: f.mu(x, &id)?,
        left_coaction: f.delta(&id, x)?,
        right_coaction: f.delta(x, &id)?,
    })
}

/// `F(b)` with the transported structure and `ν_{b,b}`.
pub fn push_bimonad<S: Strict2Cat, T: Strict2Cat>(fb: &BilaxFunctor<S, T>, b: &Bimonad<S>) -> Result<Bimonad<T>> {
    let m = push_monad(&fb.functor, &b.monad())?;
    let d = push_comonad(&fb.functor, &b.comonad())?;
    Bimonad::from_parts(&m, &d, fb.nu(&b.carrier, &b.carrier)?)
}

/// The preservation results, on the given bimonads of the source plus the
/// identity bimonad of every 0-cell: pushforwards are `ν`-bimonads;
/// regular (co)modules push to module comonads, comodule monads and
/// relative modules; every `F(x)` is a Hopf bimodule over `F(id_A)` and
/// every `F(α)` a morphism of Hopf bimodules.
pub fn check_preservation<S: Finite2Cat, T: Strict2Cat>(
    fb: &BilaxFunctor<S, T>,
    bimonads: &[Bimonad<S>],
) -> Result<Report> {
    require_bilax(&fb.functor)?;
    let (f, s, t) = (&*fb.functor, &*fb.functor.source, &*fb.functor.target);
    let mut r = Report::new(format!("preservation along {}", f.name));
    let mut all: Vec<Bimonad<S>> = s.zero_cells().iter().map(|a| Bimonad::identity(s, a)).collect();
    all.extend(bimonads.iter().cloned());
    for (i, b) in all.iter().enumerate() {
        let a = s.src1(&b.carrier);
        let nu = nu_on_images(fb, &a);
        let fbm = push_bimonad(fb, b)?;
        let p = format!("bimonad[{i}]");
        r.absorb(&format!("{p}.monad"), check_monad(t, &fbm.monad())?);
        r.absorb(&format!("{p}.comonad"), check_comonad(t, &fbm.comonad())?);
        r.absorb(&format!("{p}.nu"), check_nu_bimonad(t, &fbm, &fbm.c)?);
        for side in [Side::Left, Side::Right] {
            let module = induced_module(f, &ModuleStructure::regular(&b.monad(), side))?;
            let comodule = induced_comodule(f, &ComoduleStructure::regular(&b.comonad(), side))?;
            let q = format!("{p}.{side:?}").to_lowercase();
            r.absorb(&format!("{q}.module-comonad"), check_module_comonad(t, &fbm.comonad(), &module, &fbm, &nu)?);
            r.absorb(&format!("{q}.comodule-monad"), check_comodule_monad(t, &fbm.monad(), &comodule, &fbm, &nu)?);
            r.absorb(&format!("{q}.relative"), check_relative_module(t, &module, &comodule, &comodule, &fbm, &nu)?);
        }
    }
    for (a, xs) in endos(s) {
        let nu = nu_on_images(fb, &a);
        let b = unit_bimonad(fb, &a)?;
        let hs = xs.iter().map(|x| hopf_bimodule_of(fb, x)).collect::<Result<Vec<_>>>()?;
        for h in &hs {
            r.absorb("hopf-bimodule", check_hopf_bimodule(t, h, &b, &nu)?);
        }
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in xs.iter().enumerate() {
                for al in s.two_cells(x, y)? {
                    r.absorb("hopf-morphism", check_hopf_morphism(t, &hs[i], &hs[j], &f.c2(&al), &b)?);
                }
            }
        }
    }
    Ok(r)
}

/// `G∘F` with `ν_{g,f} = ν^G_{F(g),F(f)}`, for compatible bilax functors.
pub fn compose_bilax<A, B, C>(g: &BilaxFunctor<B, C>, f: &BilaxFunctor<A, B>) -> Result<BilaxFunctor<A, C>>
where
    A: Strict2Cat + 'static,
    B: Strict2Cat + 'static,
    C: Strict2Cat + 'static,
{
    if !(g.compatible && f.compatible) {
        return Err(Error::Precondition("composition needs compatible bilax functors".into()));
    }
    require_bilax(&f.functor)?;
    require_bilax(&g.functor)?;
    let functor = Arc::new(compose_functors(&g.functor, &f.functor));
    let (gg, ff) = (g.clone(), f.functor.clone());
    Ok(BilaxFunctor { functor, nu: Arc::new(move |x, y| gg.nu(&ff.c1(x), &ff.c1(y))), compatible: true })
}

/// The constant functor at a bimonad `b` on the 0-cell `at`: every 0-cell
/// goes to `at`, every 1-cell to `b`, every 2-cell to `id_b`; the
/// comparison cells are `b`'s structure and `ν = c_{b,b}`. Compatible
/// exactly when `c_{b,b}` is the target's own Yang-Baxter cell.
pub fn constant_bilax<S, T>(source: Arc<S>, target: Arc<T>, at: T::Obj, b: &Bimonad<T>) -> BilaxFunctor<S, T>
where
    S: Strict2Cat + 'static,
    T: Strict2Cat + 'static,
{
    let compatible = target.ybo(&b.carrier, &b.carrier).as_ref() == Some(&b.c);
    let (b1, b2, b3, b4, b5, b7) = (b.clone(), b.clone(), b.clone(), b.clone(), b.clone(), b.clone());
    let ib = target.id2(&b.carrier);
    let functor = Functor2 {
        name: "const".into(),
        source,
        target,
        on_obj: Arc::new(move |_| at.clone()),
        on_cell1: Arc::new(move |_| b1.carrier.clone()),
        on_cell2: Arc::new(move |_| ib.clone()),
        lax: Some(LaxStructure { mul: Arc::new(move |_, _| b2.mu.clone()), unit: Arc::new(move |_| b3.eta.clone()) }),
        colax: Some(ColaxStructure {
            comul: Arc::new(move |_, _| b4.delta.clone()),
            counit: Arc::new(move |_| b5.eps.clone()),
        }),
        pseudo: false,
    };
    BilaxFunctor { functor: Arc::new(functor), nu: Arc::new(move |_, _| Ok(b7.c.clone())), compatible }
}

/// The trivial 2-category with its only Yang-Baxter cell.
pub fn trivial_domain() -> Arc<TwoCat> {
    Arc::new(TwoCat::trivial().with_ybo(0, vec![0]).expect("identity cell"))
}

/// The bilax functor out of the trivial 2-category picking a bimonad.
pub fn bimonad_to_bilax<T: Strict2Cat + 'static>(
    k: Arc<T>,
    at: T::Obj,
    b: &Bimonad<T>,
) -> Result<BilaxFunctor<TwoCat, T>> {
    let r = crate::bimonad::check_bimonad(&*k, b)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("not a bimonad: {}", r.failed_laws().join(", "))));
    }
    let mut fb = constant_bilax(trivial_domain(), k, at, b);
    Arc::get_mut(&mut fb.functor).expect("fresh").name = "T_b".into();
    Ok(fb)
}

fn require_trivial_source<T: Strict2Cat>(fb: &BilaxFunctor<TwoCat, T>) -> Result<()> {
    let s = &*fb.functor.source;
    if s.n_zero_cells() != 1 || s.all_one_cells().len() != 1 {
        return Err(Error::Precondition("the source is not the trivial 2-category".into()));
    }
    Ok(())
}

/// `b = F(id_*)` with `μ_{id,id}`, `F⁰`, `Δ_{id,id}`, `F^ε`, `ν_{id,id}`.
pub fn bilax_to_bimonad<T: Strict2Cat>(fb: &BilaxFunctor<TwoCat, T>) -> Result<Bimonad<T>> {
    require_trivial_source(fb)?;
    let (f, s) = (&*fb.functor, &*fb.functor.source);
    let id = s.id1(&0);
    Ok(Bimonad {
        carrier: f.c1(&id),
        mu: f.mu(&id, &id)?,
        eta: f.eta(&0)?,
        delta: f.delta(&id, &id)?,
        eps: f.eps(&0)?,
        c: fb.nu(&id, &id)?,
    })
}

/// Whether two bilax functors agree on every cell and every structure cell
/// of their (finite) source.
pub fn bilax_tables_equal<S: Finite2Cat, T: Strict2Cat>(
    a: &BilaxFunctor<S, T>,
    b: &BilaxFunctor<S, T>,
) -> Result<bool> {
    let (f, g, s) = (&*a.functor, &*b.functor, &*a.functor.source);
    for o in s.zero_cells() {
        if f.obj(&o) != g.obj(&o) || f.eta(&o)? != g.eta(&o)? || f.eps(&o)? != g.eps(&o)? {
            return Ok(false);
        }
    }
    let ones = s.all_one_cells();
    for x in &ones {
        if f.c1(x) != g.c1(x) {
            return Ok(false);
        }
        for y in &ones {
            if s.tgt1(x) == s.src1(y) && (f.mu(y, x)? != g.mu(y, x)? || f.delta(y, x)? != g.delta(y, x)?) {
                return Ok(false);
            }
            if s.is_endo(x) && s.is_endo(y) && s.src1(x) == s.src1(y) && a.nu(x, y)? != b.nu(x, y)? {
                return Ok(false);
            }
        }
        for y in &ones {
            if s.src1(x) == s.src1(y) && s.tgt1(x) == s.tgt1(y) {
                for al in s.two_cells(x, y)? {
                    if f.c2(&al) != g.c2(&al) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The identity functor of a 2-category with a Yang-Baxter operator,
/// with `ν` its own cells.
pub fn identity_bilax<K: Strict2Cat + 'static>(k: Arc<K>) -> BilaxFunctor<K, K> {
    let k2 = k.clone();
    BilaxFunctor {
        functor: Arc::new(Functor2::identity(k)),
        nu: Arc::new(move |g, f| {
            k2.ybo(g, f)
                .ok_or_else(|| Error::Unsupported(format!("no Yang-Baxter cell on ({}, {})", k2.show1(g), k2.show1(f))))
        }),
        compatible: true,
    }
}

/// Check a Yang-Baxter family on a monoidal category through the
/// delooping, as the operator of the identity functor.
pub fn check_ybo1(y: &Ybo1) -> Result<Report> {
    let m = &*y.carrier;
    let n = m.n_objects();
    let k = Arc::new(deloop_moncat(&m.clone()));
    let table: Vec<usize> = if m.reversed() {
        y.components.clone()
    } else {
        (0..n * n).map(|i| y.components[(i % n) * n + i / n]).collect()
    };
    if table.len() != n * n {
        return Err(Error::Malformed("Yang-Baxter table is not total".into()));
    }
    let k = Arc::new(Arc::try_unwrap(k).unwrap_or_else(|a| (*a).clone()).with_ybo(0, table)?);
    check_ybo(&identity_bilax(k))
}

/// A lax transformation `ψ` and a colax transformation `φ` between bilax
/// functors `F ⇒ F'` sharing their 1-cell components:
/// `ψ_f: F'(f)∘χ_A ⇒ χ_B∘F(f)` and `φ_f: χ_B∘F(f) ⇒ F'(f)∘χ_A`.
pub struct BilaxTransformation<S: Strict2Cat, T: Strict2Cat> {
    pub source: Arc<BilaxFunctor<S, T>>,
    pub target: Arc<BilaxFunctor<S, T>>,
    pub one_cells: BTreeMap<S::Obj, T::C1>,
    pub psi: BTreeMap<S::C1, T::C2>,
    pub phi: BTreeMap<S::C1, T::C2>,
}

impl<S: Strict2Cat, T: Strict2Cat> Clone for BilaxTransformation<S, T> {
    fn clone(&self) -> Self {
        BilaxTransformation {
            source: self.source.clone(),
            target: self.target.clone(),
            one_cells: self.one_cells.clone(),
            psi: self.psi.clone(),
            phi: self.phi.clone(),
        }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> fmt::Debug for BilaxTransformation<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilaxTransformation")
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("one_cells", &self.one_cells)
            .field("psi", &self.psi)
            .field("phi", &self.phi)
            .finish()
    }
}

impl<S: Strict2Cat, T: Strict2Cat> PartialEq for BilaxTransformation<S, T> {
    fn eq(&self, other: &Self) -> bool {
        self.one_cells == other.one_cells && self.psi == other.psi && self.phi == other.phi
    }
}

impl<S: Finite2Cat, T: Strict2Cat> BilaxTransformation<S, T> {
    pub fn identity(f: Arc<BilaxFunctor<S, T>>) -> Self {
        let (fun, s, t) = (&*f.functor, &*f.functor.source, &*f.functor.target);
        let one_cells: BTreeMap<_, _> = s.zero_cells().into_iter().map(|a| (a.clone(), t.id1(&fun.obj(&a)))).collect();
        let cells: BTreeMap<_, _> = s.all_one_cells().into_iter().map(|x| (x.clone(), t.id2(&fun.c1(&x)))).collect();
        BilaxTransformation { source: f.clone(), target: f, one_cells, psi: cells.clone(), phi: cells }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> BilaxTransformation<S, T> {
    pub fn chi(&self, a: &S::Obj) -> Result<T::C1> {
        self.one_cells.get(a).cloned().ok_or_else(|| Error::Malformed(format!("no 1-cell component at {a:?}")))
    }

    pub fn psi(&self, x: &S::C1) -> Result<T::C2> {
        self.psi.get(x).cloned().ok_or_else(|| Error::Malformed(format!("no ψ component at {x:?}")))
    }

    pub fn phi(&self, x: &S::C1) -> Result<T::C2> {
        self.phi.get(x).cloned().ok_or_else(|| Error::Malformed(format!("no φ component at {x:?}")))
    }

    /// `ψ` as a lax transformation over the lax structures.
    pub fn psi_transformation(&self) -> Transformation2<S, T> {
        Transformation2 {
            kind: TransKind::Lax,
            over: Structure::Lax,
            source: self.source.functor.clone(),
            target: self.target.functor.clone(),
            one_cells: self.one_cells.clone(),
            two_cells: self.psi.clone(),
            inverses: None,
        }
    }

    /// `φ` as a colax transformation over the colax structures.
    pub fn phi_transformation(&self) -> Transformation2<S, T> {
        Transformation2 {
            kind: TransKind::Colax,
            over: Structure::Colax,
            source: self.source.functor.clone(),
            target: self.target.functor.clone(),
            one_cells: self.one_cells.clone(),
            two_cells: self.phi.clone(),
            inverses: None,
        }
    }
}

/// `ψ` and `φ` individually (`psi.*`, `phi.*`), the strong
/// Yetter-Drinfel'd condition `psi-lambda-phi`
/// `(φ_{xz}∘1)·(1∘λ_{xy,z})·(ψ_{xy}∘1) = (1∘ψ_y)·(λ'_{xy,z}∘1)·(1∘φ_z)`,
/// and the derived condition `derived.yd`: `φ_x·ψ_x` equals
/// `(μ'_{x,id}∘▷)·(1∘ν'_{id,id}∘1)·(Δ'_{x,id}∘coaction)`.
pub fn check_bilax_transformation<S: Finite2Cat, T: Strict2Cat>(x: &BilaxTransformation<S, T>) -> Result<Report> {
    let (fb, gb) = (&*x.source, &*x.target);
    require_bilax(&fb.functor)?;
    require_bilax(&gb.functor)?;
    let (f, g) = (&*fb.functor, &*gb.functor);
    let (s, t) = (&*f.source, &*f.target);
    let mut r = Report::new(format!("bilax transformation {} ⇒ {}", f.name, g.name));
    r.absorb("psi", check_transformation2(&x.psi_transformation(), TransKind::Lax)?);
    r.absorb("phi", check_transformation2(&x.phi_transformation(), TransKind::Colax)?);
    r.declare("psi-lambda-phi");
    r.declare("derived.yd");
    let (fid, gid) = (|y: &S::C1| t.id2(&f.c1(y)), |y: &S::C1| t.id2(&g.c1(y)));
    for (a, ys) in endos(s) {
        let ca = t.id2(&x.chi(&a)?);
        let id = s.id1(&a);
        for xx in out_of(s, &a) {
            let cb = t.id2(&x.chi(&s.tgt1(&xx))?);
            for y in &ys {
                for z in &ys {
                    let w = || format!("({}, {}, {})", s.show1(&xx), s.show1(y), s.show1(z));
                    let (xy, xz) = (s.comp1(&xx, y)?, s.comp1(&xx, z)?);
                    r.check_eq(
                        "psi-lambda-phi",
                        ev!(t.vc(&[
                            t.hc(&[x.phi(&xz)?, fid(y)])?,
                            t.hc(&[cb.clone(), fb.lambda(&xx, y, z)?])?,
                            t.hc(&[x.psi(&xy)?, fid(z)])?,
                        ])?),
                        ev!(t.vc(&[
                            t.hc(&[gid(&xz), x.psi(y)?])?,
                            t.hc(&[gb.lambda(&xx, y, z)?, ca.clone()])?,
                            t.hc(&[gid(&xy), x.phi(z)?])?,
                        ])?),
                        w,
                    );
                }
            }
            // the action of F'(id_A) on χ_A and the coaction
            let action = ev!(t.vcomp(&t.hcomp(&ca, &f.eps(&a)?)?, &x.psi(&id)?)?);
            let coaction = ev!(t.vcomp(&x.phi(&id)?, &t.hcomp(&ca, &f.eta(&a)?)?)?);
            let (Ok(action), Ok(coaction)) = (action, coaction) else {
                r.check("derived.yd", false, || format!("{}: (co)action is ill-typed", s.show1(&xx)));
                continue;
            };
            let form1 = ev!(t.vc(&[
                t.hc(&[g.mu(&xx, &id)?, action.clone()])?,
                t.hc(&[gid(&xx), gb.nu(&id, &id)?, ca.clone()])?,
                t.hc(&[g.delta(&xx, &id)?, coaction.clone()])?,
            ])?);
            let form2 = ev!(t.vc(&[
                t.hc(&[gid(&xx), action.clone()])?,
                t.hc(&[gb.lambda(&xx, &id, &id)?, ca.clone()])?,
                t.hc(&[gid(&xx), coaction.clone()])?,
            ])?);
            if let (Ok(p), Ok(q)) = (&form1, &form2) {
                if p != q {
                    return Err(Error::Internal("the two forms of the derived YD condition disagree".into()));
                }
            }
            r.check_eq("derived.yd", ev!(t.vcomp(&x.phi(&xx)?, &x.psi(&xx)?)?), form1, || s.show1(&xx));
        }
    }
    Ok(r)
}

/// Whether `j` is an invertible map of bialgebras `B → B'`.
fn check_bialgebra_iso(k: &MatBackend, b: &Bimonad<MatBackend>, b2: &Bimonad<MatBackend>, j: &Matrix) -> Result<()> {
    let jj = k.hcomp(j, j)?;
    let fails = [
        (k.vcomp(j, &b.mu)? != k.vcomp(&b2.mu, &jj)?, "multiplicative"),
        (k.vcomp(j, &b.eta)? != b2.eta, "unital"),
        (k.vcomp(&b2.delta, j)? != k.vcomp(&jj, &b.delta)?, "comultiplicative"),
        (k.vcomp(&b2.eps, j)? != b.eps, "counital"),
        (j.inverse().is_none(), "invertible"),
    ];
    match fails.iter().find(|f| f.0) {
        Some((_, what)) => Err(Error::Precondition(format!("j is not {what}"))),
        None => Ok(()),
    }
}

/// The bilax transformation `T_B ⇒ T_{B'}` of a Yetter-Drinfel'd module `V`
/// over `B'` and a bialgebra isomorphism `j: B → B'`:
/// `ψ = (1_V∘j⁻¹)·(▷∘1)·(1∘Φ_{B',V})·(Δ'∘1_V)` and
/// `φ = (μ'∘1_V)·(1∘Φ_{V,B'})·(λ∘1)·(1_V∘j)`.
pub fn yd_to_bilax(
    k: Arc<MatBackend>,
    b: &Bimonad<MatBackend>,
    b2: &Bimonad<MatBackend>,
    j: &Matrix,
    v: &YdModule<MatBackend>,
) -> Result<BilaxTransformation<TwoCat, MatBackend>> {
    let r = check_yd_module(&*k, b2, v)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("not a Yetter-Drinfel'd module: {}", r.failed_laws().join(", "))));
    }
    check_bialgebra_iso(&k, b, b2, j)?;
    let jinv = j.inverse().expect("checked");
    let (n, d) = (v.carrier, b2.carrier);
    let (iv, id) = (k.identity(n), k.identity(d));
    let psi = k.vc(&[
        k.hcomp(&iv, &jinv)?,
        k.hcomp(&v.action, &id)?,
        k.hcomp(&id, &k.swap(d, n))?,
        k.hcomp(&b2.delta, &iv)?,
    ])?;
    let phi =
        k.vc(&[k.hcomp(&b2.mu, &iv)?, k.hcomp(&id, &k.swap(n, d))?, k.hcomp(&v.coaction, &id)?, k.hcomp(&iv, j)?])?;
    let source = Arc::new(bimonad_to_bilax(k.clone(), (), b)?);
    let target = Arc::new(bimonad_to_bilax(k, (), b2)?);
    let star = Cell1 { src: 0, tgt: 0, idx: 0 };
    Ok(BilaxTransformation {
        source,
        target,
        one_cells: BTreeMap::from([(0, n)]),
        psi: BTreeMap::from([(star, psi)]),
        phi: BTreeMap::from([(star, phi)]),
    })
}

/// One 2-cell `a_A: χ_A ⇒ χ'_A` per 0-cell, a modification for both the
/// lax and the colax parts.
pub struct BilaxModification<S: Strict2Cat, T: Strict2Cat> {
    pub source: Arc<BilaxTransformation<S, T>>,
    pub target: Arc<BilaxTransformation<S, T>>,
    pub components: BTreeMap<S::Obj, T::C2>,
}

impl<S: Strict2Cat, T: Strict2Cat> Clone for BilaxModification<S, T> {
    fn clone(&self) -> Self {
        BilaxModification {
            source: self.source.clone(),
            target: self.target.clone(),
            components: self.components.clone(),
        }
    }
}

impl<S: Strict2Cat, T: Strict2Cat> fmt::Debug for BilaxModification<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilaxModification").field("components", &self.components).finish()
    }
}

pub fn check_bilax_modification<S: Finite2Cat, T: Strict2Cat>(m: &BilaxModification<S, T>) -> Result<Report> {
    let (x, y) = (&*m.source, &*m.target);
    if !same_bilax(&x.source, &y.source) || !same_bilax(&x.target, &y.target) {
        return Err(Error::NotComposable("modification between non-parallel transformations".into()));
    }
    let mut r = Report::new("bilax modification");
    let lax = Modification2 {
        source: Arc::new(x.psi_transformation()),
        target: Arc::new(y.psi_transformation()),
        components: m.components.clone(),
    };
    let colax = Modification2 {
        source: Arc::new(x.phi_transformation()),
        target: Arc::new(y.phi_transformation()),
        components: m.components.clone(),
    };
    r.absorb("lax", check_modification2(&lax)?);
    r.absorb("colax", check_modification2(&colax)?);
    Ok(r)
}

/// `t2 · t1`: the vertical composites of the lax and of the colax parts.
pub fn vcompose_bilax_transformations<S: Finite2Cat, T: Strict2Cat>(
    t2: &BilaxTransformation<S, T>,
    t1: &BilaxTransformation<S, T>,
) -> Result<BilaxTransformation<S, T>> {
    if !same_bilax(&t1.target, &t2.source) {
        return Err(Error::NotComposable(format!("{} ≠ {}", t1.target.name(), t2.source.name())));
    }
    let psi = vcompose_transformations(&t2.psi_transformation(), &t1.psi_transformation())?;
    let phi = vcompose_transformations(&t2.phi_transformation(), &t1.phi_transformation())?;
    Ok(BilaxTransformation {
        source: t1.source.clone(),
        target: t2.target.clone(),
        one_cells: psi.one_cells,
        psi: psi.two_cells,
        phi: phi.two_cells,
    })
}

cell_record! {
    /// A 1-cell of bimonads `b ⇒ b'`: `X` with a monad distributive law
    /// `ψ: b'∘X ⇒ X∘b` and a comonad one `φ: X∘b ⇒ b'∘X`.
    pub struct BimndCell {
        pub source: Bimonad<K>,
        pub target: Bimonad<K>,
        pub carrier: K::C1,
        pub psi: K::C2,
        pub phi: K::C2,
    }
}

cell_record! {
    /// A 1-cell of mixed distributive laws `λ ⇒ λ'`.
    pub struct DistCell {
        pub source: Lambda<K>,
        pub target: Lambda<K>,
        pub carrier: K::C1,
        pub psi: K::C2,
        pub phi: K::C2,
    }
}

/// A bilax transformation out of the trivial 2-category, read as a 1-cell
/// of bimonads.
pub fn bilax1_to_bimnd_cell<T: Strict2Cat>(x: &BilaxTransformation<TwoCat, T>) -> Result<BimndCell<T>> {
    require_trivial_source(&x.source)?;
    let id = x.source.functor.source.id1(&0);
    Ok(BimndCell {
        source: bilax_to_bimonad(&x.source)?,
        target: bilax_to_bimonad(&x.target)?,
        carrier: x.chi(&0)?,
        psi: x.psi(&id)?,
        phi: x.phi(&id)?,
    })
}

/// The inverse translation.
pub fn bimnd_cell_to_bilax<T: Strict2Cat + 'static>(
    k: Arc<T>,
    at: T::Obj,
    cell: &BimndCell<T>,
) -> Result<BilaxTransformation<TwoCat, T>> {
    let source = Arc::new(bimonad_to_bilax(k.clone(), at.clone(), &cell.source)?);
    let target = Arc::new(bimonad_to_bilax(k, at, &cell.target)?);
    let star = Cell1 { src: 0, tgt: 0, idx: 0 };
    Ok(BilaxTransformation {
        source,
        target,
        one_cells: BTreeMap::from([(0, cell.carrier.clone())]),
        psi: BTreeMap::from([(star, cell.psi.clone())]),
        phi: BTreeMap::from([(star, cell.phi.clone())]),
    })
}

/// `b ↦ (m(b), c(b), λ(c))`.
pub fn bimnd_to_dist<K: Strict2Cat>(k: &K, b: &Bimonad<K>) -> Result<Lambda<K>> {
    lambda_unchecked(k, b)
}

/// 1-cells are carried over verbatim.
pub fn bimnd_cell_to_dist<K: Strict2Cat>(k: &K, cell: &BimndCell<K>) -> Result<DistCell<K>> {
    Ok(DistCell {
        source: bimnd_to_dist(k, &cell.source)?,
        target: bimnd_to_dist(k, &cell.target)?,
        carrier: cell.carrier.clone(),
        psi: cell.psi.clone(),
        phi: cell.phi.clone(),
    })
}

/// A 0-cell of `Dist`: the four laws of a mixed distributive law.
pub fn check_dist_object<K: Strict2Cat>(k: &K, l: &Lambda<K>) -> Result<Report> {
    check_lambda(k, l)
}

/// A 1-cell of `Dist`: `ψ` a monad distributive law, `φ` a comonad one,
/// `(φ∘1)·(1∘λ)·(ψ∘1) = (1∘ψ)·(λ'∘1)·(1∘φ)`, and, when monad and comonad
/// share their carrier, `φ·ψ = (1∘▷)·(λ'∘1)·(1∘coaction)` with
/// `▷ = (1∘ε)·ψ` and `coaction = φ·(1∘η)`.
pub fn check_dist_cell<K: Strict2Cat>(k: &K, x: &DistCell<K>) -> Result<Report> {
    let (m, c) = (&x.source.monad, &x.source.comonad);
    let (m2, c2) = (&x.target.monad, &x.target.comonad);
    let (psi, phi) = (&x.psi, &x.phi);
    let ix = k.id2(&x.carrier);
    let (im, ic, im2, ic2) = (k.id2(&m.carrier), k.id2(&c.carrier), k.id2(&m2.carrier), k.id2(&c2.carrier));
    let mut r = Report::new("Dist 1-cell");
    r.check_eq(
        "psi.multiplication",
        ev!(k.vcomp(psi, &k.hcomp(&m2.mu, &ix)?)?),
        ev!(k.vc(&[
            k.hc(&[ix.clone(), m.mu.clone()])?,
            k.hc(&[psi.clone(), im.clone()])?,
            k.hc(&[im2.clone(), psi.clone()])?
        ])?),
        || "ψ·(μ'∘1)".into(),
    );
    r.check_eq("psi.unit", ev!(k.vcomp(psi, &k.hcomp(&m2.eta, &ix)?)?), ev!(k.hcomp(&ix, &m.eta)?), || {
        "ψ·(η'∘1)".into()
    });
    r.check_eq(
        "phi.comultiplication",
        ev!(k.vcomp(&k.hcomp(&c2.delta, &ix)?, phi)?),
        ev!(k.vc(&[
            k.hc(&[ic2.clone(), phi.clone()])?,
            k.hc(&[phi.clone(), ic.clone()])?,
            k.hc(&[ix.clone(), c.delta.clone()])?
        ])?),
        || "(Δ'∘1)·φ".into(),
    );
    r.check_eq("phi.counit", ev!(k.vcomp(&k.hcomp(&c2.eps, &ix)?, phi)?), ev!(k.hcomp(&ix, &c.eps)?), || {
        "(ε'∘1)·φ".into()
    });
    r.check_eq(
        "power.lambda",
        ev!(k.vc(&[
            k.hc(&[phi.clone(), im.clone()])?,
            k.hc(&[ix.clone(), x.source.cell.clone()])?,
            k.hc(&[psi.clone(), ic.clone()])?
        ])?),
        ev!(k.vc(&[
            k.hc(&[ic2.clone(), psi.clone()])?,
            k.hc(&[x.target.cell.clone(), ix.clone()])?,
            k.hc(&[im2.clone(), phi.clone()])?
        ])?),
        || "strong YD condition".into(),
    );
    if m.carrier == c.carrier {
        r.check_eq(
            "power.yd",
            ev!(k.vcomp(phi, psi)?),
            ev!({
                let action = k.vcomp(&k.hcomp(&ix, &c.eps)?, psi)?;
                let coaction = k.vcomp(phi, &k.hcomp(&ix, &m.eta)?)?;
                k.vc(&[
                    k.hc(&[ic2.clone(), action])?,
                    k.hc(&[x.target.cell.clone(), ix.clone()])?,
                    k.hc(&[im2.clone(), coaction])?,
                ])?
            }),
            || "YD condition".into(),
        );
    }
    Ok(r)
}

/// A 2-cell `ζ: X ⇒ Y` of `Dist` between parallel 1-cells.
pub fn check_dist_2cell<K: Strict2Cat>(k: &K, x: &DistCell<K>, y: &DistCell<K>, zeta: &K::C2) -> Result<Report> {
    if x.source != y.source || x.target != y.target {
        return Err(Error::NotComposable("2-cell between non-parallel Dist 1-cells".into()));
    }
    let (im, ic2) = (k.id2(&x.source.monad.carrier), k.id2(&x.target.comonad.carrier));
    let (im2, ic) = (k.id2(&x.target.monad.carrier), k.id2(&x.source.comonad.carrier));
    let mut r = Report::new("Dist 2-cell");
    r.check_eq(
        "psi",
        ev!(k.vcomp(&k.hcomp(zeta, &im)?, &x.psi)?),
        ev!(k.vcomp(&y.psi, &k.hcomp(&im2, zeta)?)?),
        || "(ζ∘1)·ψ".into(),
    );
    r.check_eq(
        "phi",
        ev!(k.vcomp(&k.hcomp(&ic2, zeta)?, &x.phi)?),
        ev!(k.vcomp(&y.phi, &k.hcomp(zeta, &ic)?)?),
        || "(1∘ζ)·φ".into(),
    );
    Ok(r)
}

/// Bilax modifications between transformations out of the trivial
/// 2-category map to `Dist` 2-cells verbatim.
pub fn modification_to_dist_2cell<T: Strict2Cat>(m: &BilaxModification<TwoCat, T>) -> Result<T::C2> {
    require_trivial_source(&m.source.source)?;
    m.components.get(&0).cloned().ok_or_else(|| Error::Malformed("no component at *".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimonad::native_ybo;
    use crate::suite;

    fn braided_z2() -> Arc<TwoCat> {
        let m = Arc::new(suite::braided_cyclic(2));
        let y = m.braiding_ybo().unwrap();
        let k = deloop_moncat(&m);
        let n = m.n_objects();
        let table = (0..n * n).map(|i| y.components[(i % n) * n + i / n]).collect();
        Arc::new(k.with_ybo(0, table).unwrap())
    }

    fn kz2_const(src: Arc<TwoCat>) -> BilaxFunctor<TwoCat, MatBackend> {
        let (k, b) = suite::kz2();
        constant_bilax(src, Arc::new(k), (), &b)
    }

    #[test]
    fn constant_functor_at_a_bialgebra_is_bilax() {
        let fb = kz2_const(braided_z2());
        assert!(fb.compatible);
        let r = check_bilax_functor(&fb).unwrap();
        assert!(r.passed(), "{:?}", r.failed_laws());
        assert!(r.law("bilax").is_some() && r.law("compatibility").is_some());
        assert!(check_bilax_consequences(&fb).unwrap().passed());
    }

    #[test]
    fn identity_on_a_symmetric_deloop_is_bilax() {
        let fb = identity_bilax(braided_z2());
        let r = check_bilax_functor(&fb).unwrap();
        assert!(r.passed(), "{:?}", r.failed_laws());
    }

    #[test]
    fn braiding_of_braided_group_is_a_ybo() {
        let m = Arc::new(suite::braided_cyclic(4));
        assert!(check_ybo1(&m.braiding_ybo().unwrap()).unwrap().passed());
    }

    #[test]
    fn suite_functors_preserve_structure() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let fbs = [kz2_const(braided_z2()), kz2_const(trivial_domain()), bimonad_to_bilax(k, (), &b).unwrap()];
        for fb in &fbs {
            let r = check_preservation(fb, &[]).unwrap();
            assert!(r.passed(), "{:?}", r.failed_laws());
        }
        let r = check_preservation(&identity_bilax(braided_z2()), &[]).unwrap();
        assert!(r.passed(), "{:?}", r.failed_laws());
    }

    #[test]
    fn constant_functor_pushes_everything_to_b() {
        let (_, b) = suite::kz2();
        let fb = kz2_const(braided_z2());
        let s = fb.functor.source.clone();
        assert_eq!(push_bimonad(&fb, &Bimonad::identity(&*s, &0)).unwrap(), b);
    }

    #[test]
    fn composite_of_constants_is_the_outer_constant() {
        let ((k, b), (_, b2)) = (suite::kz2(), suite::kz2());
        let k = Arc::new(k);
        let inner = constant_bilax(braided_z2(), k.clone(), (), &b);
        let outer = constant_bilax(k.clone(), k.clone(), (), &b2);
        let c = compose_bilax(&outer, &inner).unwrap();
        assert!(check_bilax_functor(&c).unwrap().passed());
        assert!(bilax_tables_equal(&c, &constant_bilax(braided_z2(), k, (), &b2)).unwrap());
    }

    #[test]
    fn identity_bimonad_is_the_trivial_functor() {
        let k = trivial_domain();
        let b = Bimonad::identity(&*k, &0);
        let fb = bimonad_to_bilax(k.clone(), 0, &b).unwrap();
        assert!(check_bilax_functor(&fb).unwrap().passed());
        assert!(bilax_tables_equal(&fb, &identity_bilax(k)).unwrap());
    }

    #[test]
    fn incompatible_functors_do_not_compose() {
        let (k, mut b) = suite::kz2();
        b.c = Matrix::identity(2, 4);
        let k = Arc::new(k);
        let f = constant_bilax(trivial_domain(), k.clone(), (), &b);
        assert!(!f.compatible);
        assert!(matches!(compose_bilax(&identity_bilax(k), &f), Err(Error::Precondition(_))));
    }

    #[test]
    fn a_non_bialgebra_is_refused() {
        let (k, b) = suite::kz2_function_coproduct();
        let e = bimonad_to_bilax(Arc::new(k), (), &b).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)));
    }

    #[test]
    fn bad_nu_fails_the_distributive_laws() {
        let mut fb = kz2_const(trivial_domain());
        fb.nu = Arc::new(|_, _| Ok(Matrix::identity(2, 4)));
        fb.compatible = false;
        let r = check_bilax_functor(&fb).unwrap();
        assert!(!r.law_passed("lax-dl.left"));
    }

    #[test]
    fn bimonad_round_trip() {
        for (k, b) in [suite::kz2(), suite::kz2xz2()] {
            let k = Arc::new(k);
            let fb = bimonad_to_bilax(k.clone(), (), &b).unwrap();
            assert!(check_bilax_functor(&fb).unwrap().passed());
            assert_eq!(bilax_to_bimonad(&fb).unwrap(), b);
            let again = bimonad_to_bilax(k, (), &bilax_to_bimonad(&fb).unwrap()).unwrap();
            assert!(bilax_tables_equal(&fb, &again).unwrap());
        }
    }

    #[test]
    fn composite_with_identity_is_bilax() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let f = bimonad_to_bilax(k.clone(), (), &b).unwrap();
        let g = identity_bilax(k);
        let h = compose_bilax(&g, &f).unwrap();
        assert!(check_bilax_functor(&h).unwrap().passed());
        assert!(bilax_tables_equal(&h, &f).unwrap());
    }

    #[test]
    fn images_are_hopf_bimodules_over_the_unit_image() {
        let fb = kz2_const(braided_z2());
        let s = fb.functor.source.clone();
        let k = fb.functor.target.clone();
        let b = unit_bimonad(&fb, &0).unwrap();
        for x in s.one_cells(&0, &0) {
            let h = hopf_bimodule_of(&fb, &x).unwrap();
            assert!(check_hopf_bimodule(&*k, &h, &b, &native_ybo(&*k)).unwrap().passed());
        }
    }

    #[test]
    fn yd_modules_give_bilax_transformations() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let j = Matrix::identity(2, 2);
        for v in suite::kz2_yd_dim1() {
            let x = yd_to_bilax(k.clone(), &b, &b, &j, &v).unwrap();
            let r = check_bilax_transformation(&x).unwrap();
            assert!(r.passed(), "{:?}", r.failed_laws());
            let cell = bilax1_to_bimnd_cell(&x).unwrap();
            assert_eq!(bimnd_cell_to_bilax(k.clone(), (), &cell).unwrap(), x);
            let d = bimnd_cell_to_dist(&*k, &cell).unwrap();
            assert!(check_dist_cell(&*k, &d).unwrap().passed());
        }
    }

    #[test]
    fn non_iso_j_is_refused() {
        let (k, b) = suite::kz2();
        let v = suite::kz2_yd_dim1().remove(0);
        let j = Matrix::from_rows(2, 2, &[vec![1, 1], vec![0, 0]]).unwrap();
        assert!(matches!(yd_to_bilax(Arc::new(k), &b, &b, &j, &v), Err(Error::Precondition(_))));
    }

    #[test]
    fn zero_coaction_fails() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let v = suite::kz2_yd_dim1().remove(0);
        let mut x = yd_to_bilax(k, &b, &b, &Matrix::identity(2, 2), &v).unwrap();
        let star = *x.phi.keys().next().unwrap();
        let bad = Matrix::zeros(2, x.phi[&star].rows(), x.phi[&star].cols());
        x.phi.insert(star, bad);
        assert!(!check_bilax_transformation(&x).unwrap().passed());
    }

    #[test]
    fn identity_and_composite_transformations() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let fb = Arc::new(bimonad_to_bilax(k.clone(), (), &b).unwrap());
        let id = BilaxTransformation::identity(fb.clone());
        assert!(check_bilax_transformation(&id).unwrap().passed());
        let vs = suite::kz2_yd_dim1();
        let j = Matrix::identity(2, 2);
        let mut x1 = yd_to_bilax(k.clone(), &b, &b, &j, &vs[0]).unwrap();
        let mut x2 = yd_to_bilax(k, &b, &b, &j, &vs[1]).unwrap();
        (x1.source, x1.target, x2.source, x2.target) = (fb.clone(), fb.clone(), fb.clone(), fb);
        let c = vcompose_bilax_transformations(&x2, &x1).unwrap();
        assert!(check_bilax_transformation(&c).unwrap().passed());
    }

    #[test]
    fn modifications_are_exactly_dist_two_cells() {
        let (k, b) = suite::kz2();
        let k = Arc::new(k);
        let j = Matrix::identity(2, 2);
        let xs: Vec<_> =
            suite::kz2_yd_dim1().iter().map(|v| Arc::new(yd_to_bilax(k.clone(), &b, &b, &j, v).unwrap())).collect();
        for x in &xs {
            for y in &xs {
                let (dx, dy) = (
                    bimnd_cell_to_dist(&*k, &bilax1_to_bimnd_cell(x).unwrap()).unwrap(),
                    bimnd_cell_to_dist(&*k, &bilax1_to_bimnd_cell(y).unwrap()).unwrap(),
                );
                for z in Matrix::all(2, 1, 1) {
                    let m = BilaxModification {
                        source: x.clone(),
                        target: y.clone(),
                        components: BTreeMap::from([(0, z.clone())]),
                    };
                    let as_mod = check_bilax_modification(&m).unwrap().passed();
                    let as_dist = check_dist_2cell(&*k, &dx, &dy, &z).unwrap().passed();
                    assert_eq!(as_mod, as_dist);
                    assert_eq!(modification_to_dist_2cell(&m).unwrap(), z);
                }
            }
        }
    }
}
