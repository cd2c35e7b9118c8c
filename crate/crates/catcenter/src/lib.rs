//! Finite strict monoidal categories and 2-categories: twisted centres,
//! (co)lax transformations, adjunctions, bimonads and bilax functors, all
//! checked exactly by exhaustive evaluation.

/// A record of cells of a 2-category `K`, with the derivable traits spelled
/// out so that they do not demand `K: Clone` and friends.
macro_rules! cell_record {
    ($(#[$m:meta])* pub struct $name:ident { $($(#[$fm:meta])* pub $f:ident : $t:ty),* $(,)? }) => {
        $(#[$m])*
        pub struct $name<K: $crate::twocat::Strict2Cat> { $($(#[$fm])* pub $f: $t),* }
        impl<K: $crate::twocat::Strict2Cat> Clone for $name<K> {
            fn clone(&self) -> Self {
                $name { $($f: self.$f.clone()),* }
            }
        }
        impl<K: $crate::twocat::Strict2Cat> std::fmt::Debug for $name<K> {
            fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                fm.debug_struct(stringify!($name))$(.field(stringify!($f), &self.$f))*.finish()
            }
        }
        impl<K: $crate::twocat::Strict2Cat> PartialEq for $name<K> {
            fn eq(&self, other: &Self) -> bool {
                true $(&& self.$f == other.$f)*
            }
        }
    };
}

/// Evaluate a pasting expression that may fail, as a `Result`.
macro_rules! ev {
    ($e:expr) => {
        (|| -> $crate::error::Result<_> { Ok($e) })()
    };
}

pub mod adjoint;
pub mod bilax;
pub mod bimonad;
pub mod center;
pub mod error;
pub mod fincat;
pub mod moncat;
pub mod report;
pub mod spec;
pub mod suite;
pub mod twocat;

pub use error::{Error, Result};
pub use report::Report;

/// Which side a half-braiding, action or dual lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}
