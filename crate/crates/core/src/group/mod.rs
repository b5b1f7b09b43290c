//! Finite subgroups of `SL_2`, their conjugacy classes, and normal pairs.

mod classes;
mod finite;
mod mat2;
mod normal;

pub use classes::{class_matrix, conjugacy_classes, structure_constants, structure_constants_at, ClassData};
pub use finite::{FiniteMatrixGroup, DEFAULT_CAP};
pub use mat2::Mat2;
pub use normal::{is_normal_subgroup, normal_pair, normal_subgroups, subgroup_from_generators, NormalPair};

/// `closure` with the default element cap.
pub fn closure(generators: &[Mat2], cap: usize) -> crate::Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(generators, cap)
}
