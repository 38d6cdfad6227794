//! Constructors for the structures used throughout: groups, group algebras and
//! their duals, the circle Hopf algebra, the 128-dimensional example, finite
//! field extensions and graded algebras.

mod fields;
mod groups;
mod hopf;
mod paper;

pub use fields::{
    finite_field_ext, graded_algebra, power_residues, z2_quadratic, FieldExtension, GradedAlgebra, MAX_EXT_DEGREE,
};
pub use groups::GroupTable;
pub use hopf::{circle, circle_hopf, dual_group_algebra, group_algebra, CIRCLE_BASIS};
pub use paper::{
    extend_action, figure_pairs, mono, mono_label, paper_algebra, paper_example, printed_table_action, reduced_can,
    GeneratorAction, PaperExample, ReducedCan, FIGURE, FIGURE_COVERS, M_COLS, M_ROWS, PRINTED_M, TABLE_M,
};
