//! Concrete group models: F_{q^2}, SU(3,q)/PSU(3,q) by exhaustive
//! enumeration at small q, and tiny permutation groups (PSL(2,7), A6,
//! ASL(2,3)) for the sporadic stabilizer cases.

pub mod field;
pub mod group;
pub mod matrix;
pub mod perm;
pub mod structure;

pub use field::{Fe, FieldError, Gf};
pub use group::{
    centralizer, classes_of_order, closure, conjugacy_class, element_order, elements_of_order,
    exponent_of_subset, is_abelian_subset, ClassInfo, Group, GroupError, PsuGroup,
};
pub use matrix::Mat;
pub use perm::PermGroup;
