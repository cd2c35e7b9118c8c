use std::sync::Arc;

use catcenter::center::{check_half_braiding, enumerate_center, xi_invert, Strength, Twist};
use catcenter::fincat::{preorder_category, validate_category};
use catcenter::moncat::{group_moncat, kron, validate_moncat, LaxMonFunctor, Matrix, MonCat};
use catcenter::spec::{category_decl, moncat_decl, parse_spec_str, SpecFile, Value};
use catcenter::Side;
use proptest::prelude::*;

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, rows * cols).prop_map(move |e| Matrix::from_entries(p, rows, cols, e).unwrap())
}

fn shaped(p: u32) -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (1usize..4, 1usize..4, 1usize..4, 1usize..4)
        .prop_flat_map(move |(a, b, c, d)| (matrix(p, a, b), matrix(p, b, c), matrix(p, c, d)))
}

/// A random preorder on `n` points: a random relation, closed reflexively
/// and transitively.
fn preorder() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..5).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let mut le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * n + j]).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if le[i][k] && le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
            le
        })
    })
}

/// `Z/a × Z/b` with elements in lexicographic order.
fn product_group(a: usize, b: usize) -> MonCat {
    let n = a * b;
    let names: Vec<String> = (0..n).map(|i| format!("g{}_{}", i / b, i % b)).collect();
    let table: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).map(|y| ((x / b + y / b) % a) * b + (x % b + y % b) % b).collect()).collect();
    group_moncat(&names, &table).unwrap()
}

fn identity_twist(m: MonCat) -> Twist<catcenter::twocat::TwoCat> {
    let m = Arc::new(m);
    let id = LaxMonFunctor::identity(m);
    Twist::regular(&id, &id).unwrap().1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative((a, b, c) in shaped(3)) {
        prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
    }

    #[test]
    fn kron_interchanges_with_products((a, b, _) in shaped(2), (c, d, _) in shaped(2)) {
        // (a ⊗ c)(b ⊗ d) = ab ⊗ cd
        let lhs = kron(&a, &c).mul(&kron(&b, &d)).unwrap();
        let rhs = kron(&a.mul(&b).unwrap(), &c.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverses_are_two_sided(m in (1usize..5).prop_flat_map(|n| matrix(3, n, n))) {
        let n = m.rows();
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3, n));
            prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(3, n));
        }
    }

    #[test]
    fn preorders_are_categories_and_survive_a_file_round_trip(le in preorder()) {
        let names: Vec<String> = (0..le.len()).map(|i| format!("x{i}")).collect();
        let c = preorder_category(&names, &le).unwrap();
        prop_assert!(validate_category(&c).unwrap().passed());
        let text = SpecFile { category: vec![category_decl("c", &c)], ..Default::default() }.to_toml().unwrap();
        let ws = parse_spec_str(&text, "generated").unwrap();
        match &ws.get("c").unwrap().value {
            Value::Category(back) => prop_assert_eq!(&**back, &c),
            v => prop_assert!(false, "parsed as a {}", v.kind()),
        }
    }

    #[test]
    fn abelian_groups_round_trip_and_are_their_own_centre(a in 1usize..4, b in 1usize..4) {
        let m = product_group(a, b);
        prop_assert!(validate_moncat(&m).unwrap().passed());
        let text = SpecFile { moncat: vec![moncat_decl("g", &m)], ..Default::default() }.to_toml().unwrap();
        let ws = parse_spec_str(&text, "generated").unwrap();
        match &ws.get("g").unwrap().value {
            Value::MonCat(back) => prop_assert_eq!(back.tensor_obj_table(), m.tensor_obj_table()),
            v => prop_assert!(false, "parsed as a {}", v.kind()),
        }
        let z = enumerate_center(&identity_twist(m), Side::Left, Strength::Strong).unwrap();
        prop_assert_eq!(z.objects.len(), a * b);
    }

    #[test]
    fn inversion_is_an_involution(n in 1usize..7, right in any::<bool>()) {
        let side = if right { Side::Right } else { Side::Left };
        let tw = identity_twist(catcenter::suite::cyclic(n));
        for h in enumerate_center(&tw, side, Strength::Strong).unwrap().objects {
            let x = xi_invert(&h).unwrap();
            prop_assert_ne!(x.side, h.side);
            prop_assert!(check_half_braiding(&x).unwrap().passed());
            prop_assert_eq!(xi_invert(&x).unwrap(), h);
        }
    }
}
