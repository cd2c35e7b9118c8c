//! The bundled instances: small groups and monoids as discrete monoidal
//! categories, the max-poset, group algebras over F₂ and their
//! Yetter-Drinfel'd modules.

use std::sync::Arc;

use crate::bimonad::{enumerate_yd_modules, Bimonad, YdModule};
use crate::fincat::{preorder_category, Functor};
use crate::moncat::{group_moncat, LaxMonFunctor, MatBackend, Matrix, MonCat};

/// Index of the transposition `s` in [`s3`].
pub const S3_TRANSPOSITION: usize = 3;

fn cyclic_name(i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => "g".into(),
        _ => format!("g{i}"),
    }
}

/// The one-object, one-morphism monoidal category.
pub fn trivial_moncat() -> MonCat {
    group_moncat(&["e"], &[vec![0]]).unwrap()
}

/// `C(Z/n)`: the discrete monoidal category of the cyclic group.
pub fn cyclic(n: usize) -> MonCat {
    let names: Vec<String> = (0..n).map(cyclic_name).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_moncat(&names, &table).unwrap()
}

/// `C(Z/n)` braided by identities (`x⊗y = y⊗x`).
pub fn braided_cyclic(n: usize) -> MonCat {
    let m = cyclic(n);
    let table = (0..n * n).map(|i| m.base().id(m.tensor(i / n, i % n))).collect();
    m.with_braiding(table).expect("abelian")
}

/// Elements of a group of permutations, multiplied as composition of
/// functions (`x·y` applies `y` first).
fn permutation_group(names: &[&str], perms: &[Vec<usize>]) -> MonCat {
    let compose = |x: &Vec<usize>, y: &Vec<usize>| -> Vec<usize> { y.iter().map(|&i| x[i]).collect() };
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|x| {
            perms
                .iter()
                .map(|y| {
                    let xy = compose(x, y);
                    perms.iter().position(|p| *p == xy).expect("closed under composition")
                })
                .collect()
        })
        .collect();
    group_moncat(names, &table).unwrap()
}

/// Dihedral group of the `n`-gon: `r^k` then `s r^k`, with `r(i) = i+1`
/// and `s(i) = -i` mod `n`.
fn dihedral(n: usize, names: &[&str]) -> MonCat {
    let r = |k: usize| (0..n).map(|i| (i + k) % n).collect::<Vec<_>>();
    let mut perms: Vec<Vec<usize>> = (0..n).map(r).collect();
    for k in 0..n {
        // s ∘ r^k
        perms.push((0..n).map(|i| (n - (i + k) % n) % n).collect());
    }
    permutation_group(names, &perms)
}

/// `C(S3)` with elements `e, r, r2, s, sr, sr2`.
pub fn s3() -> MonCat {
    dihedral(3, &["e", "r", "r2", "s", "sr", "sr2"])
}

/// `C(D4)`, the symmetries of the square.
pub fn d4() -> MonCat {
    dihedral(4, &["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"])
}

/// `C(Z/2 × Z/2)`.
pub fn klein() -> MonCat {
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    group_moncat(&["e", "a", "b", "ab"], &table).unwrap()
}

/// The poset `0 ≤ 1` with `⊗ = max` and unit `0`.
pub fn poset_max() -> MonCat {
    let base = Arc::new(preorder_category(&["0", "1"], &[vec![true, true], vec![false, true]]).unwrap());
    let n = 2;
    let tensor_obj: Vec<usize> = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    let m = base.n_morphisms();
    let arrow = |a: usize, b: usize| base.hom(a, b)[0];
    let tensor_mor: Vec<usize> = (0..m * m)
        .map(|i| {
            let (f, g) = (i / m, i % m);
            arrow(base.src(f).max(base.src(g)), base.tgt(f).max(base.tgt(g)))
        })
        .collect();
    MonCat::new(base, tensor_obj, tensor_mor, 0).unwrap()
}

/// Inverse of an element of a finite group category.
pub fn group_inverse(m: &MonCat, x: usize) -> Option<usize> {
    (0..m.n_objects()).find(|&y| m.tensor(x, y) == m.unit() && m.tensor(y, x) == m.unit())
}

/// Conjugation `x ↦ t x t⁻¹` as a strict monoidal endofunctor of a
/// discrete group category.
pub fn conjugation(m: &Arc<MonCat>, t: usize) -> LaxMonFunctor {
    let ti = group_inverse(m, t).expect("group element");
    let map: Vec<usize> = (0..m.n_objects()).map(|x| m.tensor(m.tensor(t, x), ti)).collect();
    let f = Functor::new(m.base().clone(), m.base().clone(), map.clone(), map).unwrap();
    LaxMonFunctor::strict(m.clone(), m.clone(), f).unwrap()
}

/// Brute-force centre of a group category: elements commuting with all.
pub fn group_center(m: &MonCat) -> Vec<usize> {
    let n = m.n_objects();
    (0..n).filter(|&g| (0..n).all(|x| m.tensor(g, x) == m.tensor(x, g))).collect()
}

/// The group algebra `F_p[G]` of a finite group as a bialgebra in the
/// matrix backend: basis `δ_h`, `μ(δ_x⊗δ_y) = δ_{xy}`, `Δ(δ_h) = δ_h⊗δ_h`,
/// `ε ≡ 1`, `η = δ_e` and `c` the swap.
pub fn group_bialgebra(m: &MonCat, p: u32) -> (MatBackend, Bimonad<MatBackend>) {
    let k = MatBackend::new(p).expect("prime characteristic");
    let n = m.n_objects();
    let mut mu = Matrix::zeros(p, n, n * n);
    let mut delta = Matrix::zeros(p, n * n, n);
    for x in 0..n {
        for y in 0..n {
            mu.set(m.tensor(x, y), x * n + y, 1);
        }
        delta.set(x * n + x, x, 1);
    }
    let mut eta = Matrix::zeros(p, n, 1);
    eta.set(m.unit(), 0, 1);
    let eps = Matrix::from_entries(p, 1, n, vec![1; n]).unwrap();
    let b = Bimonad { carrier: n, mu, eta, delta, eps, c: k.swap(n, n) };
    (k, b)
}

/// `F₂[Z/2]`.
pub fn kz2() -> (MatBackend, Bimonad<MatBackend>) {
    group_bialgebra(&cyclic(2), 2)
}

/// `F₂[Z/2 × Z/2]`.
pub fn kz2xz2() -> (MatBackend, Bimonad<MatBackend>) {
    group_bialgebra(&klein(), 2)
}

/// `F₂[Z/2]` with its coproduct replaced by the one of the function
/// algebra, `Δ(δ_h) = Σ_{xy=h} δ_x⊗δ_y`: not a bialgebra.
pub fn kz2_function_coproduct() -> (MatBackend, Bimonad<MatBackend>) {
    let m = cyclic(2);
    let (k, mut b) = group_bialgebra(&m, 2);
    let mut delta = Matrix::zeros(2, 4, 2);
    for x in 0..2 {
        for y in 0..2 {
            delta.set(x * 2 + y, m.tensor(x, y), 1);
        }
    }
    b.delta = delta;
    (k, b)
}

/// The two one-dimensional Yetter-Drinfel'd modules over `F₂[Z/2]`.
pub fn kz2_yd_dim1() -> Vec<YdModule<MatBackend>> {
    let (k, b) = kz2();
    enumerate_yd_modules(&k, &b, 1).expect("tiny search")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moncat::validate_moncat;

    #[test]
    fn bundled_monoidal_categories_are_valid() {
        for m in [trivial_moncat(), cyclic(2), cyclic(4), s3(), d4(), klein(), poset_max()] {
            assert!(validate_moncat(&m).unwrap().passed());
        }
    }

    #[test]
    fn group_centres() {
        assert_eq!(group_center(&cyclic(4)).len(), 4);
        assert_eq!(group_center(&s3()), vec![0]);
        assert_eq!(group_center(&d4()), vec![0, 2]);
        assert_eq!(group_center(&klein()).len(), 4);
    }

    #[test]
    fn s3_names_match_products() {
        let m = s3();
        let b = m.base();
        let name = |x: usize| b.object_name(x).to_string();
        let s = S3_TRANSPOSITION;
        assert_eq!(name(s), "s");
        assert_eq!(m.tensor(s, s), 0);
        assert_eq!(name(m.tensor(s, 1)), "sr");
        assert_eq!(m.tensor(1, m.tensor(1, 1)), 0);
    }
}
