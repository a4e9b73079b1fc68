use anyhow::{bail, Result};

pub const SEED_ENV: &str = "SPHERECONV_SEED";

/// Parameters shared by every command.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub samples: usize,
    pub tol: f64,
    pub ambient_dim: usize,
    pub output_path: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            trials: 200,
            samples: 512,
            tol: 1e-8,
            ambient_dim: 3,
            output_path: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.samples == 0 {
            bail!("trials and samples must be >= 1");
        }
        if !(self.tol > 0.0) {
            bail!("tol must be > 0 (got {})", self.tol);
        }
        if self.ambient_dim < 3 {
            bail!("ambient dimension must be >= 3 (got {})", self.ambient_dim);
        }
        Ok(())
    }
}
