//! Exact checks of the structural identities, each returning a
//! [`VerifyReport`]. Every comparison is equality of rationals.

mod bases;
mod baxter;
mod identities;
mod invariance;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::ring::{format_rational, Rational};

pub use self::baxter::{verify_baxter_axiom, verify_baxter_axiom_with, TestOperator};
pub use bases::{verify_binomial_symmetry, verify_divided_power, verify_lambda_binomial, verify_pairing_product};
pub use identities::{
    check_identity_eqinv, check_zeilberger_recurrence, eqinv_sides, zeilberger_coefficients, Bounds, Side,
};
pub use invariance::verify_shift_invariance;
pub use theorems::{verify_compatibility, verify_theorem_ucl};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<i64>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Counterexample", 3)?;
        st.serialize_field("indices", &self.indices)?;
        st.serialize_field("lhs", &format_rational(&self.lhs))?;
        st.serialize_field("rhs", &format_rational(&self.rhs))?;
        st.end()
    }
}

/// Outcome of one check. A failing report always carries a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "status_str")]
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

fn status_str<S: Serializer>(s: &Status, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(s.as_str())
}

impl VerifyReport {
    pub fn new(name: &str) -> Self {
        VerifyReport { name: name.to_string(), params: BTreeMap::new(), status: Status::Pass, counterexample: None }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Records a failure; the first one recorded is kept.
    pub fn fail(&mut self, indices: Vec<i64>, lhs: Rational, rhs: Rational) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.counterexample = Some(Counterexample { indices, lhs, rhs });
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}: {} ({})", self.name, self.status.as_str(), params.join(", "))?;
        if let Some(c) = &self.counterexample {
            let idx: Vec<String> = c.indices.iter().map(|i| i.to_string()).collect();
            write!(
                f,
                "\n  counterexample at [{}]: lhs = {}, rhs = {}",
                idx.join(", "),
                format_rational(&c.lhs),
                format_rational(&c.rhs)
            )?;
        }
        Ok(())
    }
}

/// A named, independent check for [`run_parallel`].
pub type Job = Box<dyn FnOnce() -> VerifyReport + Send>;

/// Runs the jobs on separate threads and returns the reports sorted by name.
pub fn run_parallel(jobs: Vec<Job>) -> Vec<VerifyReport> {
    let mut reports: Vec<VerifyReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// First index where two coefficient vectors differ.
pub(crate) fn first_mismatch<'a>(a: &'a [Rational], b: &'a [Rational]) -> Option<(usize, &'a Rational, &'a Rational)> {
    a.iter().zip(b).enumerate().find(|(_, (x, y))| x != y).map(|(i, (x, y))| (i, x, y))
}
