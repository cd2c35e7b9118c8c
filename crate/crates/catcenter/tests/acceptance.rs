//! End-to-end acceptance run: one PASS/FAIL line per criterion. Every
//! derived count or structure is compared against a brute-force oracle
//! written here, independently of the library's search code.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use catcenter::adjoint::{domain_left_adjoints, invert_half_braiding_via_adjoints, is_autonomous, lift_dual_to_center};
use catcenter::bilax::{
    bilax1_to_bimnd_cell, bilax_tables_equal, bilax_to_bimonad, bimnd_cell_to_bilax, bimnd_cell_to_dist, bimnd_to_dist,
    bimonad_to_bilax, check_bilax_consequences, check_bilax_functor, check_bilax_modification,
    check_bilax_transformation, check_dist_2cell, check_dist_cell, check_dist_object, check_preservation,
    constant_bilax, identity_bilax, modification_to_dist_2cell, yd_to_bilax, BilaxFunctor, BilaxModification,
    BilaxTransformation,
};
use catcenter::bimonad::{check_bimonad, check_lambda, enumerate_yd_modules, make_lambda, Bimonad};
use catcenter::center::{
    center_to_colax, check_half_braiding, colax_to_center, compose_center_objects, enumerate_center, unit_object,
    xi_invert, HalfBraiding, Strength, Twist,
};
use catcenter::moncat::{kron, LaxMonFunctor, MatBackend, Matrix, MonCat};
use catcenter::spec::{braided_deloop, parse_spec_str, seed_suite, Value};
use catcenter::suite;
use catcenter::twocat::{
    enumerate_modifications, enumerate_transformations, Cell1, MatPool, Strict2Cat, Structure, TransKind, TwoCat,
};
use catcenter::Side;

type Outcome = Result<String, String>;
type Instance = (&'static str, Arc<MonCat>, Arc<TwoCat>, Twist<TwoCat>);
type Named<T> = Vec<(String, Arc<T>)>;
type Field = fn(&mut Bimonad<MatBackend>) -> &mut Matrix;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn passes(r: catcenter::Result<catcenter::Report>, what: &str) -> Result<(), String> {
    let r = ok(r)?;
    ensure!(r.passed(), "{what}: {}", r.failed_laws().join(", "));
    Ok(())
}

fn regular(m: MonCat) -> (Arc<MonCat>, Arc<TwoCat>, Twist<TwoCat>) {
    let m = Arc::new(m);
    let id = LaxMonFunctor::identity(m.clone());
    let (k, tw) = Twist::regular(&id, &id).expect("identity twist");
    (m, k, tw)
}

fn twisted_s3() -> (Arc<MonCat>, Arc<TwoCat>, Twist<TwoCat>) {
    let m = Arc::new(suite::s3());
    let s = m.base().find_object("s").expect("s3 has s");
    let f = suite::conjugation(&m, s);
    let (k, tw) = Twist::regular(&f, &LaxMonFunctor::identity(m.clone())).expect("conjugation twist");
    (m, k, tw)
}

fn instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (name, m) in [
        ("Z/2", suite::cyclic(2)),
        ("Z/4", suite::cyclic(4)),
        ("S3", suite::s3()),
        ("D4", suite::d4()),
        ("Z/2xZ/2", suite::klein()),
        ("poset", suite::poset_max()),
        ("trivial", suite::trivial_moncat()),
    ] {
        let (m, k, tw) = regular(m);
        out.push((name, m, k, tw));
    }
    let (m, k, tw) = twisted_s3();
    out.push(("S3 twisted by s", m, k, tw));
    out
}

fn is_identity_cell(k: &TwoCat, c: &<TwoCat as Strict2Cat>::C2) -> bool {
    *c == k.id2(&k.dom2(c))
}

/// Elements commuting with everything, straight from the multiplication.
fn brute_group_center(m: &MonCat) -> BTreeSet<usize> {
    let n = m.n_objects();
    (0..n).filter(|&g| (0..n).all(|x| m.tensor(g, x) == m.tensor(x, g))).collect()
}

fn group_centers() -> Outcome {
    let mut counts = Vec::new();
    for (name, m, expected) in
        [("Z/2", suite::cyclic(2), 2), ("Z/4", suite::cyclic(4), 4), ("S3", suite::s3(), 1), ("D4", suite::d4(), 2)]
    {
        let oracle = brute_group_center(&m);
        ensure!(oracle.len() == expected, "{name}: brute force found {} central elements", oracle.len());
        let (_, k, tw) = regular(m);
        let z = ok(enumerate_center(&tw, Side::Left, Strength::Strong))?;
        let carriers: BTreeSet<usize> = z.objects.iter().map(|h| h.carrier.idx).collect();
        ensure!(z.objects.len() == expected, "{name}: {} centre objects", z.objects.len());
        ensure!(carriers == oracle, "{name}: carriers {carriers:?} vs centre {oracle:?}");
        for h in &z.objects {
            ensure!(h.components.iter().all(|c| is_identity_cell(&k, c)), "{name}: non-identity component");
        }
        counts.push(format!("{name}={}", z.objects.len()));
    }
    Ok(counts.join(" "))
}

fn twisted_centralizer() -> Outcome {
    let (m, k, tw) = twisted_s3();
    let s = m.base().find_object("s").unwrap();
    let conj = suite::conjugation(&m, s);
    let n = m.n_objects();
    // all 6×6 instances of m·F(x) = x·m
    let mut oracle = Vec::new();
    for c in 0..n {
        if (0..n).all(|x| m.tensor(c, conj.functor.obj(x)) == m.tensor(x, c)) {
            oracle.push(c);
        }
    }
    let s_inv = suite::group_inverse(&m, s).unwrap();
    ensure!(oracle == vec![s_inv], "brute force found {oracle:?}");
    let z = ok(enumerate_center(&tw, Side::Left, Strength::Weak))?;
    ensure!(z.objects.len() == 1, "{} objects", z.objects.len());
    ensure!(z.objects[0].carrier.idx == s_inv, "carrier {}", k.show1(&z.objects[0].carrier));
    passes(check_half_braiding(&z.objects[0]), "half-braiding")?;
    Ok(format!("1 object at m = {}", m.base().object_name(s_inv)))
}

fn bijections() -> Outcome {
    let mut done = 0;
    for (name, _, _, tw) in instances() {
        for (side, kind) in [(Side::Left, TransKind::Colax), (Side::Right, TransKind::Lax)] {
            for strength in [Strength::Weak, Strength::Strong] {
                let z = ok(enumerate_center(&tw, side, strength))?;
                let ts =
                    ok(enumerate_transformations(&tw.f, &tw.g, kind, Structure::Lax, strength == Strength::Strong))?;
                let tag = format!("{name} {side:?} {strength:?}");
                ensure!(
                    ts.len() == z.objects.len(),
                    "{tag}: {} transformations vs {} objects",
                    ts.len(),
                    z.objects.len()
                );
                let mut idx = Vec::new();
                for t in &ts {
                    let h = ok(colax_to_center(t))?;
                    ensure!(center_to_colax(&h) == *t, "{tag}: transformation round trip");
                    let i = z.find(&h).ok_or_else(|| format!("{tag}: transformation has no centre object"))?;
                    idx.push(i);
                }
                ensure!(idx.iter().collect::<BTreeSet<_>>().len() == idx.len(), "{tag}: not injective");
                for h in &z.objects {
                    ensure!(ok(colax_to_center(&center_to_colax(h)))? == *h, "{tag}: object round trip");
                }
                let ts: Vec<_> = ts.into_iter().map(Arc::new).collect();
                for (a, x) in ts.iter().enumerate() {
                    for (b, y) in ts.iter().enumerate() {
                        let mods: BTreeSet<String> = ok(enumerate_modifications(x, y))?
                            .iter()
                            .map(|m| format!("{:?}", m.components[&0]))
                            .collect();
                        let mors: BTreeSet<String> =
                            z.hom(idx[a], idx[b]).into_iter().map(|c| format!("{c:?}")).collect();
                        ensure!(mods == mors, "{tag}: modifications {a}->{b} differ from centre morphisms");
                    }
                }
            }
        }
        done += 1;
    }
    Ok(format!("{done} instances, both sides, weak and strong"))
}

fn xi_involution() -> Outcome {
    let mut sizes = Vec::new();
    for (name, _, _, tw) in instances() {
        let l = ok(enumerate_center(&tw, Side::Left, Strength::Strong))?;
        let r = ok(enumerate_center(&tw, Side::Right, Strength::Strong))?;
        ensure!(
            l.objects.len() == r.objects.len(),
            "{name}: |Zl| = {} but |Zr| = {}",
            l.objects.len(),
            r.objects.len()
        );
        for (from, to) in [(&l, &r), (&r, &l)] {
            for h in &from.objects {
                let x = ok(xi_invert(h))?;
                ensure!(to.find(&x).is_some(), "{name}: image is not in the other centre");
                let back = ok(xi_invert(&x))?;
                ensure!(back == *h && back.inverses == h.inverses, "{name}: not an involution");
            }
        }
        sizes.push(format!("{name}={}", l.objects.len()));
    }
    Ok(sizes.join(" "))
}

fn composition_laws() -> Outcome {
    let (_, _, tw) = regular(suite::cyclic(4));
    let mut triples = 0;
    for side in [Side::Left, Side::Right] {
        for strength in [Strength::Weak, Strength::Strong] {
            let z = ok(enumerate_center(&tw, side, strength))?;
            let unit = ok(unit_object(&tw, side))?;
            let c = |a: &HalfBraiding<TwoCat>, b: &HalfBraiding<TwoCat>| ok(compose_center_objects(a, b));
            for a in &z.objects {
                ensure!(c(&unit, a)? == *a && c(a, &unit)? == *a, "unit law fails at {:?}", a.carrier);
                for b in &z.objects {
                    let ab = c(a, b)?;
                    passes(check_half_braiding(&ab), "composite")?;
                    ensure!(z.find(&ab).is_some(), "composite is not in the centre");
                    for d in &z.objects {
                        ensure!(c(&ab, d)? == c(a, &c(b, d)?)?, "associativity fails");
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{triples} triples"))
}

fn adjoint_inversion() -> Outcome {
    let mut seen = Vec::new();
    for (name, _, k, tw) in instances() {
        if !ok(is_autonomous(&*k))?.autonomous() {
            ensure!(domain_left_adjoints(&tw).is_err(), "{name}: non-autonomous domain produced adjoints");
            continue;
        }
        let adj = ok(domain_left_adjoints(&tw))?;
        let weak = ok(enumerate_center(&tw, Side::Left, Strength::Weak))?;
        let strong = ok(enumerate_center(&tw, Side::Left, Strength::Strong))?;
        let mut upgraded = Vec::new();
        for h in &weak.objects {
            let u = ok(invert_half_braiding_via_adjoints(h, &adj))?;
            passes(check_half_braiding(&u), name)?;
            let inv = u.inverses.clone().unwrap();
            for (c, i) in u.components.iter().zip(&inv) {
                ensure!(ok(k.vcomp(i, c))? == k.id2(&k.dom2(c)), "{name}: γ·χ is not an identity");
                ensure!(ok(k.vcomp(c, i))? == k.id2(&k.cod2(c)), "{name}: χ·γ is not an identity");
            }
            upgraded.push(u);
        }
        ensure!(
            upgraded.len() == strong.objects.len(),
            "{name}: {} upgraded vs {} strong",
            upgraded.len(),
            strong.objects.len()
        );
        for u in &upgraded {
            let i = strong.find(u).ok_or_else(|| format!("{name}: upgraded object is not strong"))?;
            ensure!(strong.objects[i].inverses == u.inverses, "{name}: inverses differ");
        }
        seen.push(name);
    }
    Ok(format!("{} autonomous instances", seen.len()))
}

fn dual_lifting() -> Outcome {
    let (_, k, tw) = regular(suite::cyclic(4));
    let autonomy = ok(is_autonomous(&*k))?;
    ensure!(autonomy.autonomous(), "C(Z/4) is not autonomous");
    let z = ok(enumerate_center(&tw, Side::Left, Strength::Strong))?;
    for h in &z.objects {
        let lift = ok(lift_dual_to_center(h, &autonomy.right[&h.carrier]))?;
        ensure!(lift.report.passed(), "ev/coev: {}", lift.report.failed_laws().join(", "));
        passes(check_half_braiding(&lift.dual), "dual")?;
        ensure!(z.find(&lift.dual).is_some(), "dual is not in the centre");
        let again = ok(lift_dual_to_center(&lift.dual, &autonomy.right[&lift.dual.carrier]))?;
        ensure!(again.report.passed(), "double dual ev/coev");
        ensure!(again.dual.carrier == h.carrier, "double dual carrier differs");
    }
    Ok(format!("{} duals", z.objects.len()))
}

fn bimonad_suite() -> Outcome {
    let mut mutants = 0;
    for (name, (k, b)) in [("F2[Z/2]", suite::kz2()), ("F2[Z/2xZ/2]", suite::kz2xz2())] {
        let r = ok(check_bimonad(&k, &b))?;
        ensure!(r.passed() && r.laws.len() == 8, "{name}: {} laws, failed {:?}", r.laws.len(), r.failed_laws());
        let fields: [(&str, Field); 5] = [
            ("mu", |b| &mut b.mu),
            ("eta", |b| &mut b.eta),
            ("delta", |b| &mut b.delta),
            ("eps", |b| &mut b.eps),
            ("c", |b| &mut b.c),
        ];
        for (field, get) in fields {
            let (rows, cols) = {
                let mut t = b.clone();
                let m = get(&mut t);
                (m.rows(), m.cols())
            };
            for i in 0..rows {
                for j in 0..cols {
                    let mut bad = b.clone();
                    let m = get(&mut bad);
                    m.set(i, j, 1 - m.get(i, j));
                    let failed = check_bimonad(&k, &bad).map_or(true, |r| !r.passed());
                    ensure!(failed, "{name}: flipping {field}[{i}][{j}] still passes");
                    mutants += 1;
                }
            }
        }
    }
    Ok(format!("{mutants} single-entry mutants all rejected"))
}

/// All `(carrier 1)` bilax transformations `T_b ⇒ T_b`, by brute force
/// over ψ and φ.
fn all_dim1_transformations(
    k: &Arc<MatBackend>,
    fb: &Arc<BilaxFunctor<TwoCat, MatBackend>>,
) -> Result<Vec<BilaxTransformation<TwoCat, MatBackend>>, String> {
    let d = ok(bilax_to_bimonad(fb))?.carrier;
    let star = Cell1 { src: 0, tgt: 0, idx: 0 };
    let mut out = Vec::new();
    for psi in Matrix::all(k.p(), d, d) {
        for phi in Matrix::all(k.p(), d, d) {
            let x = BilaxTransformation {
                source: fb.clone(),
                target: fb.clone(),
                one_cells: [(0, 1)].into(),
                psi: [(star, psi.clone())].into(),
                phi: [(star, phi)].into(),
            };
            if ok(check_bilax_transformation(&x))?.passed() {
                out.push(x);
            }
        }
    }
    Ok(out)
}

fn bilax_correspondences() -> Outcome {
    let mut lambdas = Vec::new();
    let mut cells = 0;
    for (k, b) in [suite::kz2(), suite::kz2xz2()] {
        let k = Arc::new(k);
        // 0-cells
        let fb = ok(bimonad_to_bilax(k.clone(), (), &b))?;
        passes(check_bilax_functor(&fb), "T_b")?;
        let back = ok(bilax_to_bimonad(&fb))?;
        ensure!(back == b, "bimonad round trip");
        ensure!(ok(bilax_tables_equal(&fb, &ok(bimonad_to_bilax(k.clone(), (), &back))?))?, "bilax round trip");
        let l = ok(bimnd_to_dist(&*k, &b))?;
        passes(check_dist_object(&*k, &l), "Dist 0-cell")?;
        lambdas.push(l.cell.clone());
        // 1-cells: every dim-1 transformation, found by brute force
        let fb = Arc::new(fb);
        // the full hom-set is searched where ψ, φ range over 2^8 pairs;
        // for the larger algebra, the images of its Yetter-Drinfel'd modules
        let xs = if b.carrier <= 2 {
            all_dim1_transformations(&k, &fb)?
        } else {
            let j = Matrix::identity(k.p(), b.carrier);
            ok(enumerate_yd_modules(&k, &b, 1))?
                .iter()
                .map(|v| ok(yd_to_bilax(k.clone(), &b, &b, &j, v)))
                .collect::<Result<Vec<_>, _>>()?
        };
        ensure!(!xs.is_empty(), "no 1-cells");
        let mut images = BTreeSet::new();
        for x in &xs {
            let cell = ok(bilax1_to_bimnd_cell(x))?;
            ensure!(ok(bimnd_cell_to_bilax(k.clone(), (), &cell))? == *x, "1-cell round trip");
            let dc = ok(bimnd_cell_to_dist(&*k, &cell))?;
            passes(check_dist_cell(&*k, &dc), "Dist 1-cell")?;
            images.insert(format!("{:?}{:?}", dc.psi, dc.phi));
        }
        ensure!(images.len() == xs.len(), "Dist is not injective on 1-cells");
        cells += xs.len();
        // 2-cells between them: 1×1 scalars
        let xs: Vec<_> = xs.into_iter().map(Arc::new).collect();
        for x in &xs {
            for y in &xs {
                let (dx, dy) = (
                    ok(bimnd_cell_to_dist(&*k, &ok(bilax1_to_bimnd_cell(x))?))?,
                    ok(bimnd_cell_to_dist(&*k, &ok(bilax1_to_bimnd_cell(y))?))?,
                );
                for z in Matrix::all(k.p(), 1, 1) {
                    let m =
                        BilaxModification { source: x.clone(), target: y.clone(), components: [(0, z.clone())].into() };
                    let as_mod = ok(check_bilax_modification(&m))?.passed();
                    let as_dist = ok(check_dist_2cell(&*k, &dx, &dy, &z))?.passed();
                    ensure!(as_mod == as_dist, "2-cell correspondence fails at {z:?}");
                    if as_mod {
                        ensure!(ok(modification_to_dist_2cell(&m))? == z, "2-cell round trip");
                    }
                }
            }
        }
    }
    ensure!(lambdas[0] != lambdas[1], "Dist is not injective on 0-cells");
    Ok(format!("2 bimonads, {cells} 1-cells"))
}

fn suite_bilax() -> Result<Named<BilaxFunctor<TwoCat, MatBackend>>, String> {
    let ws = ok(parse_spec_str(&ok(seed_suite().to_toml())?, "suite"))?;
    let mut out = Vec::new();
    for e in &ws.entries {
        if let Value::Bilax(f) = &e.value {
            out.push((e.name.clone(), f.clone()));
        }
    }
    ensure!(!out.is_empty(), "the suite has no bilax functors");
    Ok(out)
}

fn preservation() -> Outcome {
    let mut n = 0;
    for (name, fb) in suite_bilax()? {
        passes(check_bilax_functor(&fb), &name)?;
        passes(check_preservation(&fb, &[]), &name)?;
        passes(check_bilax_consequences(&fb), &name)?;
        n += 1;
    }
    let z2 = Arc::new(ok(braided_deloop(&Arc::new(suite::braided_cyclic(2))))?);
    let id = identity_bilax(z2.clone());
    passes(check_preservation(&id, &[]), "identity")?;
    passes(check_bilax_consequences(&id), "identity")?;
    // the suite bimonads pushed along the identity of a finite pool of
    // matrix dimensions, and along a constant functor into it
    let (k, b) = suite::kz2();
    let pool = Arc::new(MatPool::new(k, vec![1, 2]));
    let b = Bimonad::<MatPool> { carrier: b.carrier, mu: b.mu, eta: b.eta, delta: b.delta, eps: b.eps, c: b.c };
    let id = identity_bilax(pool.clone());
    passes(check_preservation(&id, std::slice::from_ref(&b)), "identity on matrices")?;
    let c = constant_bilax(z2, pool, (), &b);
    passes(check_bilax_functor(&c), "constant")?;
    passes(check_preservation(&c, &[]), "constant")?;
    passes(check_bilax_consequences(&c), "constant")?;
    Ok(format!("{} functors", n + 3))
}

/// Dimension-1 Yetter-Drinfel'd structures over `F₂[G]`, straight from the
/// group table: an action `a: G → F₂`, a coaction `v ↦ Σ c_g g⊗v`.
fn brute_yd_dim1(m: &MonCat) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let n = m.n_objects();
    let e = m.unit();
    let words = |len: usize| (0..1u32 << len).map(move |w| (0..len).map(|i| (w >> i) & 1).collect::<Vec<u32>>());
    let mut out = BTreeSet::new();
    for a in words(n) {
        let module = a[e] == 1 && (0..n).all(|g| (0..n).all(|h| a[m.tensor(g, h)] == a[g] * a[h]));
        if !module {
            continue;
        }
        for c in words(n) {
            let coassoc = (0..n).all(|g| (0..n).all(|h| c[g] * c[h] == if g == h { c[g] } else { 0 }));
            let counit = c.iter().sum::<u32>() % 2 == 1;
            if !(coassoc && counit) {
                continue;
            }
            // h·v₋₁ ⊗ h·v₀ = (h·v)₋₁ h ⊗ (h·v)₀, coefficient of g⊗v
            let yd = (0..n).all(|h| {
                (0..n).all(|g| {
                    let lhs: u32 = (0..n).filter(|&k| m.tensor(h, k) == g).map(|k| c[k] * a[h]).sum();
                    let rhs: u32 = (0..n).filter(|&k| m.tensor(k, h) == g).map(|k| a[h] * c[k]).sum();
                    lhs % 2 == rhs % 2
                })
            });
            if yd {
                out.insert((a.clone(), c));
            }
        }
    }
    out
}

fn yd_enumeration() -> Outcome {
    let (k, b) = suite::kz2();
    let found = ok(enumerate_yd_modules(&k, &b, 1))?;
    let oracle = brute_yd_dim1(&suite::cyclic(2));
    ensure!(found.len() == 2 && oracle.len() == 2, "found {}, brute force {}", found.len(), oracle.len());
    let got: BTreeSet<(Vec<u32>, Vec<u32>)> =
        found.iter().map(|v| (v.action.entries().to_vec(), v.coaction.entries().to_vec())).collect();
    ensure!(got == oracle, "structures differ: {got:?} vs {oracle:?}");
    let k = Arc::new(k);
    for v in &found {
        let x = ok(yd_to_bilax(k.clone(), &b, &b, &Matrix::identity(2, 2), v))?;
        let r = ok(check_bilax_transformation(&x))?;
        ensure!(r.passed(), "yd_to_bilax: {}", r.failed_laws().join(", "));
        ensure!(
            ["psi.", "phi."].iter().all(|p| r.laws.iter().any(|l| l.law.starts_with(p))),
            "lax and colax laws were not both checked"
        );
    }
    Ok("2 structures".into())
}

fn ni_lambda() -> Outcome {
    let s3 = suite::group_bialgebra(&suite::s3(), 2);
    for (name, (k, b)) in [("F2[Z/2]", suite::kz2()), ("F2[Z/2xZ/2]", suite::kz2xz2()), ("F2[S3]", s3)] {
        let l = ok(make_lambda(&k, &b))?;
        let r = ok(check_lambda(&k, &l))?;
        for law in ["lambda.monad", "lambda.unit", "lambda.comonad", "lambda.counit"] {
            ensure!(r.law_passed(law), "{name}: {law}");
        }
        ensure!(r.passed(), "{name}: {}", r.failed_laws().join(", "));
        // (μ⊗1)(1⊗c)(Δ⊗1) by hand
        let one = Matrix::identity(k.p(), b.carrier);
        let by_hand = ok(ok(kron(&b.mu, &one).mul(&kron(&one, &b.c)))?.mul(&kron(&b.delta, &one)))?;
        ensure!(l.cell == by_hand, "{name}: λ differs from its formula");
    }
    Ok("3 bimonads".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 12] = [
        ("group centres", group_centers, Some(Duration::from_secs(1))),
        ("twisted centraliser", twisted_centralizer, Some(Duration::from_secs(1))),
        ("transformations and modifications vs centres", bijections, None),
        ("inversion is an involution", xi_involution, None),
        ("composition of centre objects", composition_laws, None),
        ("adjoint inversion", adjoint_inversion, None),
        ("dual lifting", dual_lifting, None),
        ("bimonad laws and mutants", bimonad_suite, Some(Duration::from_secs(1))),
        ("bilax correspondences", bilax_correspondences, None),
        ("preservation", preservation, None),
        ("Yetter-Drinfel'd enumeration", yd_enumeration, Some(Duration::from_secs(5))),
        ("distributive law of a bimonad", ni_lambda, None),
    ];
    // debug builds are far slower than the budgets are meant for
    let timed = !cfg!(debug_assertions);
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match (result, budget) {
            (Ok(_), Some(b)) if timed && took > *b => Err(format!("took {took:?}, budget {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({} ms)", i + 1, took.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({} ms)", i + 1, took.as_millis());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
