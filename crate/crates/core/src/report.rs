use serde::Serialize;

use crate::rational::to_canonical;
use crate::series::PowerSeries;

/// Outcome of checking one identity through a given order.
///
/// `passed` holds exactly when the residual vanishes at every degree
/// `0..=order_checked`, and then `first_failure_degree` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_name: String,
    pub order_checked: usize,
    pub residual: PowerSeries,
    pub passed: bool,
    pub first_failure_degree: Option<usize>,
}

impl IdentityReport {
    pub fn from_residual(name: impl Into<String>, residual: PowerSeries) -> Self {
        let first_failure_degree = residual.valuation();
        IdentityReport {
            identity_name: name.into(),
            order_checked: residual.order(),
            passed: first_failure_degree.is_none(),
            first_failure_degree,
            residual,
        }
    }

    /// A report for a check that could not be carried out at all; it fails
    /// at degree 0 and carries a zero residual of order 0.
    pub fn aborted(name: impl Into<String>, reason: &str) -> Self {
        IdentityReport {
            identity_name: format!("{} ({reason})", name.into()),
            order_checked: 0,
            residual: PowerSeries::zero(0),
            passed: false,
            first_failure_degree: Some(0),
        }
    }

    pub fn summary(&self) -> ReportSummary {
        ReportSummary {
            identity: self.identity_name.clone(),
            order_checked: self.order_checked,
            passed: self.passed,
            first_failure_degree: self.first_failure_degree,
            residual_at_failure: self
                .first_failure_degree
                .filter(|&k| k <= self.residual.order())
                .map(|k| self.residual.coeff(k))
                .filter(|c| !num_traits::Zero::is_zero(*c))
                .map(to_canonical),
        }
    }
}

/// Serializable view of an [`IdentityReport`] without the full residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub identity: String,
    pub order_checked: usize,
    pub passed: bool,
    pub first_failure_degree: Option<usize>,
    pub residual_at_failure: Option<String>,
}
