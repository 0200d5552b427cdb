//! Small numeric helpers shared across the engines.

/// Compensated (Neumaier) summation. Keeps long probability reductions
/// accurate to the last few ulps, which the conservation checks rely on.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Numeric tolerances used by the contracts in this crate.
///
/// Everything that asserts a conservation law or an equality bound pulls
/// its threshold from here so that the limits are set in one place.
pub mod tolerance {
    /// Unitarity residual allowed for coin matrices.
    pub const COIN_UNITARITY: f64 = 1e-12;
    /// A state fed into `step` must have total probability this close to 1.
    pub const STEP_INPUT_NORM: f64 = 1e-8;
    /// Every probability vector in a series must sum to 1 within this.
    pub const SERIES_NORM: f64 = 1e-10;
    /// Row sums of a transition matrix must be 1 within this.
    pub const ROW_STOCHASTIC: f64 = 1e-12;
    /// Classical distributions must sum to 1 within this.
    pub const CLASSICAL_NORM: f64 = 1e-12;
    /// Heatmap rows must sum to 1 within this.
    pub const HEATMAP_ROW_SUM: f64 = 1e-8;
    /// A Monte Carlo mean distribution must sum to 1 within this.
    pub const MONTE_CARLO_NORM: f64 = 1e-9;
    /// Autocorrelation peak below this is reported as aperiodic.
    pub const PERIODIC_STRENGTH_MIN: f64 = 0.5;
}
