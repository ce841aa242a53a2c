//! Check records shared by the verification layers.

use serde::Serialize;

use crate::error::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

/// Outcome of one named check. A failing check always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        let w: String = witness.into();
        Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(if w.is_empty() { "(no witness text)".into() } else { w }),
            detail: None,
        }
    }

    pub fn budget(name: impl Into<String>, what: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::BudgetExceeded, witness: Some(what.into()), detail: None }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn expect(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    /// Turns an error into a failing (or budget) record.
    pub fn from_error(name: impl Into<String>, err: &AlgebraError) -> Self {
        if err.is_budget() {
            Check::budget(name, err.to_string())
        } else {
            Check::fail(name, err.to_string())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
