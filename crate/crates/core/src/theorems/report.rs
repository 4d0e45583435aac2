//! Verdict reporting: the structured result of one identity check.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::exactq::MultiPoly;
use crate::families::FamilySpec;

/// The first index at which an identity check found a mismatch, with the
/// canonical text of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstFailure {
    pub index: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Structured result of an identity check.
///
/// `passed` holds iff `first_failure` is absent; `erratum_note` is present
/// iff the checked statement deviates from its printed source form (the
/// corrected form is what gets verified).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub identity_id: String,
    pub params: Vec<(String, String)>,
    pub max_index: usize,
    pub passed: bool,
    pub first_failure: Option<FirstFailure>,
    pub erratum_note: Option<String>,
}

/// Incremental builder for a verdict: feed it `(index, lhs, rhs)` triples in
/// sweep order and it records the first mismatch.
pub struct IdentityCheck {
    identity_id: String,
    params: Vec<(String, String)>,
    max_index: usize,
    failure: Option<FirstFailure>,
    erratum_note: Option<String>,
}

impl IdentityCheck {
    pub fn new(identity_id: impl Into<String>) -> Self {
        Self {
            identity_id: identity_id.into(),
            params: Vec::new(),
            max_index: 0,
            failure: None,
            erratum_note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), alloc::format!("{value}")));
        self
    }

    pub fn params_from(mut self, params: &[(String, String)]) -> Self {
        self.params.extend_from_slice(params);
        self
    }

    pub fn erratum(mut self, note: &str) -> Self {
        self.erratum_note = Some(note.to_string());
        self
    }

    /// Records a comparison at a (possibly multi-dimensional) sweep index.
    /// Only the first mismatch is kept; the sweep order defines "first".
    pub fn compare(&mut self, index: &[usize], lhs: &MultiPoly, rhs: &MultiPoly) {
        if let Some(&lead) = index.first() {
            if lead > self.max_index {
                self.max_index = lead;
            }
        }
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(FirstFailure {
                index: index.to_vec(),
                lhs: alloc::format!("{lhs}"),
                rhs: alloc::format!("{rhs}"),
            });
        }
    }

    /// Records an already-diagnosed structural failure (for example an
    /// uncancelled pole) without a polynomial pair.
    pub fn structural_failure(&mut self, index: &[usize], diagnostic: &str) {
        if self.failure.is_none() {
            self.failure = Some(FirstFailure {
                index: index.to_vec(),
                lhs: alloc::format!("structural: {diagnostic}"),
                rhs: String::new(),
            });
        }
    }

    pub fn has_failure(&self) -> bool {
        self.failure.is_some()
    }

    pub fn finish(self) -> VerdictReport {
        VerdictReport {
            identity_id: self.identity_id,
            params: self.params,
            max_index: self.max_index,
            passed: self.failure.is_none(),
            first_failure: self.failure,
            erratum_note: self.erratum_note,
        }
    }
}

/// Canonical parameter list for a family spec, in fixed order.
pub fn family_params(spec: &FamilySpec) -> Vec<(String, String)> {
    let mut out = Vec::new();
    out.push(("kind".to_string(), spec.trig.label().to_string()));
    out.push(("v".to_string(), spec.kernel.order.to_string()));
    out.push(("lambda".to_string(), alloc::format!("{}", spec.kernel.lambda)));
    out.push(("mu".to_string(), alloc::format!("{}", spec.kernel.mu)));
    out.push(("u".to_string(), spec.u.label()));
    if let Some(k) = &spec.shift {
        out.push(("shift".to_string(), k.clone()));
    }
    out
}

/// Deterministic merge order for suite output: identity id, then rendered
/// parameters.
pub fn sort_reports(reports: &mut [VerdictReport]) {
    reports.sort_by(|a, b| {
        a.identity_id
            .cmp(&b.identity_id)
            .then_with(|| a.params.cmp(&b.params))
    });
}
