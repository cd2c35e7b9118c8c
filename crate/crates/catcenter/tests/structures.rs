use std::path::Path;
use std::sync::Arc;

use catcenter::adjoint::{is_autonomous, Handedness};
use catcenter::bimonad::{check_bimonad, check_yd_module, enumerate_yd_modules};
use catcenter::center::{enumerate_center, Strength, Twist};
use catcenter::moncat::{LaxMonFunctor, MonCat};
use catcenter::spec::{parse_spec, Value};
use catcenter::suite;
use catcenter::twocat::{deloop_moncat, regular_bimodule, Strict2Cat};
use catcenter::Side;

fn identity_twist(m: MonCat) -> Twist<catcenter::twocat::TwoCat> {
    let m = Arc::new(m);
    let id = LaxMonFunctor::identity(m);
    Twist::regular(&id, &id).unwrap().1
}

#[test]
fn poset_has_weak_but_not_strong_half_braidings() {
    let tw = identity_twist(suite::poset_max());
    let weak = enumerate_center(&tw, Side::Left, Strength::Weak).unwrap();
    let strong = enumerate_center(&tw, Side::Left, Strength::Strong).unwrap();
    assert!(strong.objects.len() <= weak.objects.len());
    assert!(strong.objects.iter().all(|h| weak.find(h).is_some()));
    let k = deloop_moncat(&suite::poset_max());
    let a = is_autonomous(&k).unwrap();
    let (cell, side) = a.witness.expect("1 has no adjoint");
    assert_eq!(k.show1(&cell), "1");
    assert!(matches!(side, Handedness::Left | Handedness::Right));
}

#[test]
fn regular_bimodule_centre_matches_the_group_centre() {
    for m in [suite::cyclic(3), suite::s3()] {
        let c = Arc::new(m.clone());
        let id = LaxMonFunctor::identity(c.clone());
        let (_, tw) = Twist::bimodule(&regular_bimodule(c), &id, &id).unwrap();
        let z = enumerate_center(&tw, Side::Left, Strength::Strong).unwrap();
        assert_eq!(z.objects.len(), suite::group_center(&m).len());
    }
}

#[test]
fn group_algebras_in_odd_characteristic_are_bimonads() {
    let (k, b) = suite::group_bialgebra(&suite::cyclic(3), 3);
    assert!(check_bimonad(&k, &b).unwrap().passed());
}

#[test]
fn function_coproduct_breaks_the_bimonad_law() {
    let (k, b) = suite::kz2_function_coproduct();
    let r = check_bimonad(&k, &b).unwrap();
    assert!(!r.passed());
    assert!(!r.failed_laws().is_empty());
}

/// Over `F₂[Z/2 × Z/2]` every character is trivial, so the one-dimensional
/// Yetter-Drinfel'd modules are exactly the four gradings.
#[test]
fn klein_four_has_one_yd_line_per_grading() {
    let (k, b) = suite::kz2xz2();
    let found = enumerate_yd_modules(&k, &b, 1).unwrap();
    assert_eq!(found.len(), 4);
    let mut grades: Vec<usize> = found
        .iter()
        .map(|v| {
            assert!(v.action.entries().iter().all(|&a| a == 1));
            let hot: Vec<usize> = (0..4).filter(|&g| v.coaction.get(g, 0) == 1).collect();
            assert_eq!(hot.len(), 1);
            hot[0]
        })
        .collect();
    grades.sort();
    assert_eq!(grades, vec![0, 1, 2, 3]);
    for v in &found {
        assert!(check_yd_module(&k, &b, v).unwrap().passed());
    }
}

#[test]
fn bundled_spec_file_loads() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs/s3.spec");
    let ws = parse_spec(&path).unwrap();
    match &ws.get("s3").unwrap().value {
        Value::MonCat(m) => assert_eq!(suite::group_center(m), vec![0]),
        v => panic!("s3 parsed as a {}", v.kind()),
    }
}
