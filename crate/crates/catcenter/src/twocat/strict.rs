//! The interface every strict 2-category implements, plus the exact matrix
//! backend seen as a one-object 2-category.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::moncat::{kron, MatBackend, Matrix};

/// A strict 2-category. `vcomp(b, a)` is `b·a` (apply `a` first) and
/// `hcomp(b, a)` is `b∘a` with `a` on the source side.
pub trait Strict2Cat: Send + Sync {
    type Obj: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type C1: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type C2: Clone + Eq + Hash + Debug + Send + Sync;

    fn src1(&self, x: &Self::C1) -> Self::Obj;
    fn tgt1(&self, x: &Self::C1) -> Self::Obj;
    fn id1(&self, a: &Self::Obj) -> Self::C1;
    fn comp1(&self, g: &Self::C1, f: &Self::C1) -> Result<Self::C1>;

    fn dom2(&self, a: &Self::C2) -> Self::C1;
    fn cod2(&self, a: &Self::C2) -> Self::C1;
    fn id2(&self, x: &Self::C1) -> Self::C2;
    fn vcomp(&self, b: &Self::C2, a: &Self::C2) -> Result<Self::C2>;
    fn hcomp(&self, b: &Self::C2, a: &Self::C2) -> Result<Self::C2>;

    /// Two-sided inverse of a 2-cell, if one exists.
    fn inverse2(&self, a: &Self::C2) -> Option<Self::C2>;

    /// The 2-category's own Yang-Baxter cell `g∘f ⇒ f∘g` on a pair of
    /// endo-1-cells, when one is declared.
    fn ybo(&self, _g: &Self::C1, _f: &Self::C1) -> Option<Self::C2> {
        None
    }

    fn show0(&self, a: &Self::Obj) -> String {
        format!("{a:?}")
    }
    fn show1(&self, x: &Self::C1) -> String;
    fn show2(&self, a: &Self::C2) -> String;

    /// `cells[0] ∘ cells[1] ∘ …`, read left to right as in a tensor product.
    fn hc(&self, cells: &[Self::C2]) -> Result<Self::C2> {
        let (last, rest) = cells.split_last().ok_or_else(|| Error::Internal("empty row".into()))?;
        rest.iter().rev().try_fold(last.clone(), |acc, c| self.hcomp(c, &acc))
    }

    /// `cells[0] · cells[1] · …`: the last cell is applied first.
    fn vc(&self, cells: &[Self::C2]) -> Result<Self::C2> {
        let (last, rest) = cells.split_last().ok_or_else(|| Error::Internal("empty column".into()))?;
        rest.iter().rev().try_fold(last.clone(), |acc, c| self.vcomp(c, &acc))
    }

    /// `cells[0] ∘ cells[1] ∘ …` on 1-cells.
    fn hc1(&self, cells: &[Self::C1]) -> Result<Self::C1> {
        let (last, rest) = cells.split_last().ok_or_else(|| Error::Internal("empty row".into()))?;
        rest.iter().rev().try_fold(last.clone(), |acc, c| self.comp1(c, &acc))
    }

    fn is_endo(&self, x: &Self::C1) -> bool {
        self.src1(x) == self.tgt1(x)
    }
}

/// Finite enumeration of cells, needed by every exhaustive search.
pub trait Finite2Cat: Strict2Cat {
    fn zero_cells(&self) -> Vec<Self::Obj>;
    fn one_cells(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::C1>;
    fn two_cells(&self, x: &Self::C1, y: &Self::C1) -> Result<Vec<Self::C2>>;

    fn all_one_cells(&self) -> Vec<Self::C1> {
        let zs = self.zero_cells();
        zs.iter().flat_map(|a| zs.iter().flat_map(move |b| self.one_cells(a, b))).collect()
    }
}

impl Strict2Cat for MatBackend {
    type Obj = ();
    type C1 = usize;
    type C2 = Matrix;

    fn src1(&self, _: &usize) {}
    fn tgt1(&self, _: &usize) {}
    fn id1(&self, _: &()) -> usize {
        1
    }
    fn comp1(&self, g: &usize, f: &usize) -> Result<usize> {
        Ok(g * f)
    }
    fn dom2(&self, a: &Matrix) -> usize {
        a.cols()
    }
    fn cod2(&self, a: &Matrix) -> usize {
        a.rows()
    }
    fn id2(&self, x: &usize) -> Matrix {
        self.identity(*x)
    }
    fn vcomp(&self, b: &Matrix, a: &Matrix) -> Result<Matrix> {
        b.mul(a)
    }
    fn hcomp(&self, b: &Matrix, a: &Matrix) -> Result<Matrix> {
        Ok(kron(b, a))
    }
    fn inverse2(&self, a: &Matrix) -> Option<Matrix> {
        a.inverse()
    }
    fn ybo(&self, g: &usize, f: &usize) -> Option<Matrix> {
        Some(self.swap(*g, *f))
    }
    fn show0(&self, _: &()) -> String {
        "*".into()
    }
    fn show1(&self, x: &usize) -> String {
        format!("dim {x}")
    }
    fn show2(&self, a: &Matrix) -> String {
        format!("{a:?}")
    }
}

/// The matrix backend restricted to an explicit finite pool of dimensions,
/// so that hom-sets can be enumerated. Enumeration refuses hom-sets larger
/// than `max_cells`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatPool {
    pub backend: MatBackend,
    pub dims: Vec<usize>,
    pub max_cells: usize,
}

impl MatPool {
    pub fn new(backend: MatBackend, dims: Vec<usize>) -> Self {
        MatPool { backend, dims, max_cells: 1 << 16 }
    }
}

impl Strict2Cat for MatPool {
    type Obj = ();
    type C1 = usize;
    type C2 = Matrix;

    fn src1(&self, _: &usize) {}
    fn tgt1(&self, _: &usize) {}
    fn id1(&self, a: &()) -> usize {
        self.backend.id1(a)
    }
    fn comp1(&self, g: &usize, f: &usize) -> Result<usize> {
        self.backend.comp1(g, f)
    }
    fn dom2(&self, a: &Matrix) -> usize {
        a.cols()
    }
    fn cod2(&self, a: &Matrix) -> usize {
        a.rows()
    }
    fn id2(&self, x: &usize) -> Matrix {
        self.backend.identity(*x)
    }
    fn vcomp(&self, b: &Matrix, a: &Matrix) -> Result<Matrix> {
        b.mul(a)
    }
    fn hcomp(&self, b: &Matrix, a: &Matrix) -> Result<Matrix> {
        Ok(kron(b, a))
    }
    fn inverse2(&self, a: &Matrix) -> Option<Matrix> {
        a.inverse()
    }
    fn ybo(&self, g: &usize, f: &usize) -> Option<Matrix> {
        Some(self.backend.swap(*g, *f))
    }
    fn show0(&self, _: &()) -> String {
        "*".into()
    }
    fn show1(&self, x: &usize) -> String {
        format!("dim {x}")
    }
    fn show2(&self, a: &Matrix) -> String {
        format!("{a:?}")
    }
}

impl Finite2Cat for MatPool {
    fn zero_cells(&self) -> Vec<()> {
        vec![()]
    }
    fn one_cells(&self, _: &(), _: &()) -> Vec<usize> {
        self.dims.clone()
    }
    fn two_cells(&self, x: &usize, y: &usize) -> Result<Vec<Matrix>> {
        let p = self.backend.p() as f64;
        let count = p.powi((x * y) as i32);
        if count > self.max_cells as f64 {
            return Err(Error::CapExceeded(format!("{count} matrices of shape {y}×{x}")));
        }
        Ok(Matrix::all(self.backend.p(), *y, *x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pasting_helpers_follow_reading_order() {
        let k = MatBackend::new(2).unwrap();
        let a = k.matrix(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = k.matrix(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(k.vc(&[b.clone(), a.clone()]).unwrap(), b.mul(&a).unwrap());
        assert_eq!(k.hc(&[b.clone(), a.clone(), a.clone()]).unwrap(), kron(&b, &kron(&a, &a)));
        assert_eq!(k.hc1(&[2, 3, 1]).unwrap(), 6);
    }

    #[test]
    fn ybo_of_backend_is_the_swap() {
        let k = MatBackend::new(3).unwrap();
        let c = k.ybo(&2, &3).unwrap();
        assert_eq!((k.dom2(&c), k.cod2(&c)), (6, 6));
        // swap ∘ swap is the identity on 2⊗3
        assert_eq!(k.swap(3, 2).mul(&c).unwrap(), k.identity(6));
    }

    #[test]
    fn pool_refuses_large_hom_sets() {
        let mut pool = MatPool::new(MatBackend::new(2).unwrap(), vec![1, 2, 4]);
        pool.max_cells = 256;
        assert_eq!(pool.two_cells(&2, &2).unwrap().len(), 16);
        assert!(matches!(pool.two_cells(&4, &4), Err(Error::CapExceeded(_))));
    }
}
