//! Injectivity of linear projections of curves on the quadric and the cone.
//!
//! Every line through a point of the surface either lies on the surface,
//! in which case it is a ruling, or meets the surface in at most one more
//! point. Injectivity questions therefore reduce to counting the distinct
//! points of the curve on the rulings through the center, which is done
//! over the algebraic closure with [`distinct_root_count`].
//!
//! [`distinct_root_count`]: crate::exactalg::distinct_root_count

mod census;
mod inner;
mod outer;
mod param;

use serde::Serialize;

pub use census::{census_inner_sets, census_parametrized, InnerSets, ParametrizedCensus, EVIDENCE_NOTE};
pub use inner::{inner_membership_cone, inner_membership_quadric, InnerMembership};
pub use outer::{outer_injectivity, outer_injectivity_cone, outer_injectivity_quadric, ProjectionVerdict};
pub use param::{inner_membership_parametrized, parametrized_injectivity, ParametrizedReport, RationalCurve};

/// One ruling through the center and the curve's points on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RulingRecord {
    pub ruling: String,
    pub restriction: String,
    pub distinct_points: usize,
    pub profile: Vec<usize>,
    /// Contact order with the curve at the base point, for inner projections.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contact_at_point: Option<usize>,
}
