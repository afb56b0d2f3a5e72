use super::{twist_closed, twist_oracle, twist_p_form, TwistParameter};
use crate::annulus::AnnulusCoords;
use crate::error::{Error, Result};

pub const DEFAULT_METHOD: &str = "p-form";

/// One way of evaluating the twist flow.
pub trait TwistMethod: Send + Sync {
    /// Registry key, as accepted by `--method`.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn twist(&self, x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForm;

#[derive(Debug, Clone, Copy, Default)]
pub struct PForm;

#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle;

impl TwistMethod for ClosedForm {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn description(&self) -> &'static str {
        "cosh/exponential closed form in X, L(f2) and sqrt(X1 X2)"
    }

    fn twist(&self, x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
        twist_closed(x, t)
    }
}

impl TwistMethod for PForm {
    fn name(&self) -> &'static str {
        "p-form"
    }

    fn description(&self) -> &'static str {
        "rational form in e^{tL} and the fixed points of f2"
    }

    fn twist(&self, x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
        twist_p_form(x, t)
    }
}

impl TwistMethod for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "stratum-map action on the lifted vertices followed by cross ratios"
    }

    fn twist(&self, x: &AnnulusCoords, t: TwistParameter) -> Result<AnnulusCoords> {
        twist_oracle(x, t)
    }
}

static METHODS: [&dyn TwistMethod; 3] = [&ClosedForm, &PForm, &Oracle];

/// All registered methods, in a fixed order.
pub fn methods() -> &'static [&'static dyn TwistMethod] {
    &METHODS
}

pub fn method(name: &str) -> Result<&'static dyn TwistMethod> {
    METHODS
        .iter()
        .copied()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::UnknownMethod(name.to_string()))
}
