//! Computable skeleton of the loop-enlarged (Fukaya-Floer type) complex.
//!
//! For an odd prime p the enlarged chain group at index i is
//! CF_{2i} + CF_{2i-2}, with an extra `Z_2<theta>` summand at i = 0. The
//! horizontal arrows are the base boundary blocks; the two theta arrows
//! (CF_2 -> theta and theta -> CF_{-4}) count 0-dimensional moduli gated by
//! an odd Dirac parity and by nontriviality of the loop class in H_1.
//!
//! The diagonal arrows live on 2-dimensional moduli cut down by determinant
//! line sections; no counting formula exists for them here, so they are
//! carried as explicitly unknown blocks and no homology of the enlarged
//! complex is ever reported. What is reported is the vanishing certificate:
//! the block conditions under which every degree-0 cycle of the relevant
//! shape is forced to be a boundary regardless of the unknown diagonals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::flat::{FlatClass, LensSpace};
use crate::floer::{assemble_complex, element_with_evidence, BoundaryEvidence, FloerComplexData};

/// Generator of the enlarged chain group at a fixed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaGenerator {
    /// From the CF_{2i} block.
    Upper(FlatClass),
    /// From the CF_{2i-2} block.
    Lower(FlatClass),
    /// The trivial-connection summand (index 0 only).
    Theta,
}

/// The enlarged complex skeleton: base complex, theta arrows, and the
/// explicitly-unknown diagonal blocks.
#[derive(Debug, Clone)]
pub struct GammaComplexData {
    pub base: FloerComplexData,
    pub gamma_nontrivial: bool,
    /// Entry per CF_2 generator: the arrow CF_2 -> `Z_2<theta>`.
    pub theta_in: Vec<u8>,
    /// Entry per CF_{-4} generator: the arrow `Z_2<theta>` -> CF_{-4}.
    pub theta_out: Vec<u8>,
    /// One flag per index block; never true (no counting formula exists).
    pub diagonal_known: [bool; 4],
}

fn require_odd_prime(y: &LensSpace) -> Result<()> {
    if !is_prime(y.p())? {
        return Err(Error::domain(format!(
            "the enlarged complex needs an odd prime p, got p = {}",
            y.p()
        )));
    }
    Ok(())
}

/// Ordered generators of the enlarged group at index i (mod 4): the
/// CF_{2i} block, then the CF_{2i-2} block, then theta when i = 0.
pub fn chain_group(
    y: &LensSpace,
    i: usize,
    _gamma_nontrivial: bool,
) -> Result<Vec<GammaGenerator>> {
    require_odd_prime(y)?;
    let base = assemble_complex(y)?;
    Ok(chain_group_from(&base, i))
}

pub fn chain_group_from(base: &FloerComplexData, i: usize) -> Vec<GammaGenerator> {
    let i = i % 4;
    let mut out: Vec<GammaGenerator> = base.generators[i]
        .iter()
        .copied()
        .map(GammaGenerator::Upper)
        .collect();
    out.extend(
        base.generators[(i + 3) % 4]
            .iter()
            .copied()
            .map(GammaGenerator::Lower),
    );
    if i == 0 {
        out.push(GammaGenerator::Theta);
    }
    out
}

/// Ungated arrow entry rho_l -> theta for rho_l in CF_2: Dirac parity on a
/// valid bundle parameter with k1 = +-l, k2 = -+rl (mod p).
pub fn theta_entry_in(l: u64, y: &LensSpace) -> Result<(u8, BoundaryEvidence)> {
    element_with_evidence(l, 0, y)
}

/// Ungated arrow entry theta -> rho_m for rho_m in CF_{-4}: parameters
/// k1 = +-m, k2 = +-rm (mod p).
pub fn theta_entry_out(m: u64, y: &LensSpace) -> Result<(u8, BoundaryEvidence)> {
    element_with_evidence(0, m, y)
}

/// Both theta arrows; identically zero unless the loop class is nonzero.
pub fn theta_maps(y: &LensSpace, gamma_nontrivial: bool) -> Result<(Vec<u8>, Vec<u8>)> {
    require_odd_prime(y)?;
    let base = assemble_complex(y)?;
    theta_maps_from(&base, gamma_nontrivial)
}

pub fn theta_maps_from(
    base: &FloerComplexData,
    gamma_nontrivial: bool,
) -> Result<(Vec<u8>, Vec<u8>)> {
    let y = &base.y;
    let mut theta_in = Vec::with_capacity(base.generators[1].len());
    for class in &base.generators[1] {
        let (parity, _) = theta_entry_in(class.l, y)?;
        theta_in.push(if gamma_nontrivial { parity } else { 0 });
    }
    let mut theta_out = Vec::with_capacity(base.generators[2].len());
    for class in &base.generators[2] {
        let (parity, _) = theta_entry_out(class.l, y)?;
        theta_out.push(if gamma_nontrivial { parity } else { 0 });
    }
    Ok((theta_in, theta_out))
}

/// Assemble the whole skeleton.
pub fn build(y: &LensSpace, gamma_nontrivial: bool) -> Result<GammaComplexData> {
    require_odd_prime(y)?;
    let base = assemble_complex(y)?;
    let (theta_in, theta_out) = theta_maps_from(&base, gamma_nontrivial)?;
    Ok(GammaComplexData {
        base,
        gamma_nontrivial,
        theta_in,
        theta_out,
        diagonal_known: [false; 4],
    })
}

/// The vanishing certificate: block conditions on the base complex plus the
/// theta-index parity gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingCertificate {
    pub cf0_to_cfm2_iso: bool,
    pub cf2_to_cf0_zero: bool,
    pub cfm2_to_cfm4_zero: bool,
    pub i_theta_even: bool,
    pub certified: bool,
}

/// Certify that the degree-0 relative-invariant class vanishes: the base
/// block CF_0 -> CF_{-2} must be a GF(2) isomorphism, the blocks
/// CF_2 -> CF_0 and CF_{-2} -> CF_{-4} must vanish, and the theta Dirac
/// index must be even (killing the theta coefficient).
pub fn vanishing_certificate(y: &LensSpace, i_theta_even: bool) -> Result<VanishingCertificate> {
    require_odd_prime(y)?;
    let base = assemble_complex(y)?;
    Ok(vanishing_certificate_from(&base, i_theta_even))
}

pub fn vanishing_certificate_from(
    base: &FloerComplexData,
    i_theta_even: bool,
) -> VanishingCertificate {
    // d_0: C_0 -> C_3 is the block CF_0 -> CF_{-2}; d_1: C_1 -> C_0 is
    // CF_2 -> CF_0; d_3: C_3 -> C_2 is CF_{-2} -> CF_{-4}.
    let d0 = &base.boundaries[0];
    let cf0_to_cfm2_iso = d0.rows() == d0.cols() && d0.rank() == d0.cols();
    let cf2_to_cf0_zero = base.boundaries[1].is_zero();
    let cfm2_to_cfm4_zero = base.boundaries[3].is_zero();
    let certified = cf0_to_cfm2_iso && cf2_to_cf0_zero && cfm2_to_cfm4_zero && i_theta_even;
    VanishingCertificate {
        cf0_to_cfm2_iso,
        cf2_to_cf0_zero,
        cfm2_to_cfm4_zero,
        i_theta_even,
        certified,
    }
}
