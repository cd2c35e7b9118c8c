//! Finite strict 2-categories, 2-functors, (co)lax transformations and
//! modifications.

pub mod functor;
pub mod strict;
pub mod table;
pub mod transformation;

pub use functor::{check_lax_functor2, compose_functors, ColaxStructure, Functor2, LaxStructure, Structure};
pub use strict::{Finite2Cat, MatPool, Strict2Cat};
pub use table::{
    composition_functor, deloop_bimodule, deloop_moncat, endo_moncat, regular_bimodule, validate_bimodule,
    validate_twocat, BimoduleCat, Cell1, Cell2, TwoCat,
};
pub use transformation::{
    candidate_cap, check_modification2, check_transformation2, enumerate_modifications, enumerate_transformations,
    hcompose_transformations, transformation_category, vcompose_transformations, Modification2, TransKind,
    Transformation2, TransformationCategory,
};
