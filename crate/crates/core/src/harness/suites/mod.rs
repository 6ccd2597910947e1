pub(crate) mod derivatives;
pub(crate) mod distortion;
pub(crate) mod elliptic_bounds;
pub(crate) mod identities;
pub(crate) mod three_param;

use crate::error::Result;

/// Run a fallible point evaluation.
pub(crate) fn sides(f: impl FnOnce() -> Result<Vec<f64>>) -> Result<Vec<f64>> {
    f()
}
