//! Finite-dimensional modules of the Yangian and its truncations: gl(N)
//! irreps, evaluation modules, tensor products, highest weights, Drinfeld
//! polynomials, the quantum determinant and the coproduct defect.

pub mod coproduct;
pub mod drinfeld;
pub mod gl_irrep;
pub mod qdet;
pub mod subquotient;
pub mod yangian_rep;

pub use coproduct::{coproduct_defect, coproduct_mode, DefectReport};
pub use drinfeld::{classify, drinfeld_data, drinfeld_polynomials, DrinfeldData, Plan, Verdict};
pub use qdet::{evaluation_series, qdet, qdet_series, CenterSeries, Qdet};
pub use subquotient::{irreducible_dimension, irreducible_quotient};

pub use gl_irrep::{weyl_dimension, GlnIrrep};
pub use yangian_rep::{
    evaluation_rep, expected_weight, highest_weight, mode_relations_failure, rtt_grid_failure, rtt_symbolic_holds,
    tensor2, tensor_from_weights, tensor_reps, truncation_support, WeightSeries, YangianRep,
};

#[cfg(test)]
mod tests;
