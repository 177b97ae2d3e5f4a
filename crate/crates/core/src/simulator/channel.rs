use rand::Rng;

use super::SystemConfig;
use crate::error::{Error, Result};
use crate::linalg::{fill_standard_complex_gaussian, orthonormalize_columns, CMatrix};

/// One user's `N x M` channel with i.i.d. `CN(0, 1)` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization {
    h: CMatrix,
}

impl ChannelRealization {
    pub fn from_matrix(h: CMatrix) -> Self {
        Self { h }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.h
    }

    pub fn into_matrix(self) -> CMatrix {
        self.h
    }
}

/// Unitary `M x M` matrix whose columns are the transmit beams.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamMatrix {
    a: CMatrix,
}

/// Largest tolerated entry of `|A^H A - I|`.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

impl BeamMatrix {
    /// Wraps a fixed beam matrix, rejecting anything that is not unitary.
    pub fn from_matrix(a: CMatrix) -> Result<Self> {
        if a.rows() != a.cols() || a.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "beam matrix must be square and non-empty, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let defect = a.unitarity_defect();
        if defect > UNITARITY_TOLERANCE {
            return Err(Error::InvalidConfig(format!(
                "beam matrix is not unitary: max |A^H A - I| = {defect:e}"
            )));
        }
        Ok(Self { a })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            a: CMatrix::identity(m),
        }
    }

    pub fn beams(&self) -> usize {
        self.a.cols()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.a
    }
}

/// Draws the channel of one user: each entry is `(g1 + i g2) / sqrt(2)`.
pub fn draw_channel<R: Rng + ?Sized>(cfg: &SystemConfig, rng: &mut R) -> ChannelRealization {
    ChannelRealization {
        h: CMatrix::standard_complex_gaussian(cfg.receive_antennas(), cfg.transmit_antennas(), rng),
    }
}

pub(crate) fn redraw_channel<R: Rng + ?Sized>(h: &mut ChannelRealization, rng: &mut R) {
    fill_standard_complex_gaussian(h.h.as_mut_slice(), rng);
}

/// Draws a Haar-distributed unitary beam matrix by orthonormalizing a
/// complex Gaussian matrix (positive real diagonal in the implied `R`).
pub fn draw_beams<R: Rng + ?Sized>(m: usize, rng: &mut R) -> BeamMatrix {
    let z = CMatrix::standard_complex_gaussian(m, m, rng);
    BeamMatrix {
        a: orthonormalize_columns(&z),
    }
}

/// `G = H A`; column `m` is the effective channel seen on beam `m`.
pub fn effective_gains(h: &ChannelRealization, a: &BeamMatrix) -> Result<CMatrix> {
    h.h.checked_mul(&a.a).ok_or_else(|| {
        Error::DimensionMismatch(format!(
            "channel is {}x{} but beam matrix is {}x{}",
            h.h.rows(),
            h.h.cols(),
            a.a.rows(),
            a.a.cols()
        ))
    })
}
