use crate::error::{Error, Result};

/// Precision policy shared by the series evaluators and the root finders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative truncation tolerance for power series.
    pub series_tol: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
    /// Arguments `z` above this value use the expansion around `z = 1`.
    pub near_one_switch: f64,
    /// Tolerance handed to the modular-equation solver.
    pub newton_tol: f64,
    pub max_newton_iters: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            series_tol: 1e-15,
            max_terms: 10_000,
            near_one_switch: 0.95,
            newton_tol: 1e-13,
            max_newton_iters: 60,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.series_tol > 0.0 && self.series_tol < 1.0) {
            return Err(Error::domain(format!(
                "series_tol must lie in (0, 1), got {}",
                self.series_tol
            )));
        }
        if !(self.near_one_switch > 0.0 && self.near_one_switch < 1.0) {
            return Err(Error::domain(format!(
                "near_one_switch must lie in (0, 1), got {}",
                self.near_one_switch
            )));
        }
        if self.max_terms == 0 || self.max_newton_iters == 0 {
            return Err(Error::domain("term and iteration caps must be positive"));
        }
        if !(self.newton_tol > 0.0) {
            return Err(Error::domain("newton_tol must be positive"));
        }
        Ok(())
    }

    /// Solver settings derived from this policy.
    pub fn solver(&self) -> ModularSolveConfig {
        ModularSolveConfig {
            abs_tol: self.newton_tol,
            max_iters: self.max_newton_iters,
            ..ModularSolveConfig::default()
        }
    }
}

/// Settings for inverting the modulus `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularSolveConfig {
    /// Absolute tolerance on the recovered radius.
    pub abs_tol: f64,
    pub max_iters: usize,
    /// Smallest radius probed by the initial bracket.
    pub bracket_floor: f64,
}

impl Default for ModularSolveConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_iters: 80,
            bracket_floor: 1e-15,
        }
    }
}

impl ModularSolveConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain("abs_tol must be positive"));
        }
        if !(self.bracket_floor > 0.0 && self.bracket_floor < 0.5) {
            return Err(Error::domain("bracket_floor must lie in (0, 1/2)"));
        }
        if self.max_iters == 0 {
            return Err(Error::domain("max_iters must be positive"));
        }
        Ok(())
    }
}
