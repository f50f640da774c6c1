//! The Z/4-graded GF(2) instanton Floer chain complex of a lens space.
//!
//! Gradings are the mod-8 indices delta of flat classes, computed through
//! the lattice recipe (2 N1 + N2 mod 8 on the grading bundle parameter).
//! For odd p every delta is even, so only the even family exists; chain
//! groups are indexed by i = delta/2 mod 4. A boundary matrix element
//! <d rho_l, rho_m> is nonzero exactly when some bundle parameter (k1,k2)
//! with k1 = +-l +- m, k2 = r(+-m -+ l) mod p carries a minimal solution
//! set and an odd Dirac solution count.
//!
//! The candidate search is complete on [1,p-1] x [1,p-1]: any k1 >= p
//! admits the solution (p,0), which is neither (0,0) nor a corner, so
//! minimality already fails there (symmetrically for k2 >= p). When several
//! candidates are valid their parities must agree; disagreement is reported
//! as an internal inconsistency, never resolved by choice.

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::flat::{canonical_label, enumerate_classes, grading_kpair, FlatClass, LensSpace};
use crate::lattice::{count_lattice, dirac_solutions, KPair, LatticeCounts, LatticeTables};

/// A residue mod 8 (the value group of the Floer grading).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Grading(u8);

impl Grading {
    pub fn new(value: i64) -> Self {
        Grading(value.rem_euclid(8) as u8)
    }

    pub fn value(&self) -> u8 {
        self.0
    }

    /// Chain-group index i = delta/2 mod 4; defined for even gradings only.
    pub fn chain_index(&self) -> Option<usize> {
        (self.0 % 2 == 0).then_some((self.0 / 2) as usize % 4)
    }
}

impl std::fmt::Display for Grading {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Floer grading delta of the class rho_l: (2 N1 + N2) mod 8 on the
/// grading parameter k1 = l, k2 = -rl (mod p). Accepts any representative
/// 0 < l < p and canonicalizes first.
pub fn grading(l: u64, y: &LensSpace) -> Result<Grading> {
    if l == 0 || l >= y.p() {
        return Err(Error::domain(format!(
            "grading needs 0 < l < p, got l = {l}"
        )));
    }
    let l = canonical_label(l as i64, y.p());
    let k = grading_kpair(l, y)?;
    let c = count_lattice(&k, y);
    Ok(Grading::new(2 * c.n1 as i64 + c.n2 as i64))
}

/// delta of the trivial class theta: 0 for every lens space.
pub fn grading_theta(_y: &LensSpace) -> Grading {
    Grading(0)
}

/// delta of rho_l on the orientation-reversed space: -delta - 2 mod 8.
pub fn grading_reversed(l: u64, y: &LensSpace) -> Result<Grading> {
    let d = grading(l, y)?;
    Ok(Grading::new(-(d.value() as i64) - 2))
}

/// Formal dimension mod 8 of the cylinder moduli between distinct classes:
/// delta(a) - delta(b) - dim Gamma_a.
pub fn moduli_dim_mod8(a: &FlatClass, b: &FlatClass, y: &LensSpace) -> Result<Grading> {
    if a.l == b.l {
        return Err(Error::domain(format!(
            "moduli dimension needs distinct classes, got {a} twice"
        )));
    }
    let da = class_grading(a, y)?;
    let db = class_grading(b, y)?;
    Ok(Grading::new(
        da.value() as i64 - db.value() as i64 - a.stabilizer.dim(),
    ))
}

fn class_grading(c: &FlatClass, y: &LensSpace) -> Result<Grading> {
    if c.is_theta() {
        Ok(grading_theta(y))
    } else {
        grading(c.l, y)
    }
}

/// Dense GF(2) matrix with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Gf2Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.bits[r * self.words_per_row + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub(crate) fn from_bit_rows(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        let n_rows = rows.len();
        let mut bits = Vec::with_capacity(n_rows * words_per_row);
        for row in rows {
            debug_assert_eq!(row.len(), words_per_row);
            bits.extend_from_slice(&row);
        }
        Gf2Matrix {
            rows: n_rows,
            cols,
            words_per_row,
            bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Gf2Matrix::identity(self.rows)
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Rank over GF(2) by Gaussian elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut work = self.bits.clone();
        let wpr = self.words_per_row.max(1);
        let mut rank = 0usize;
        for col in 0..self.cols {
            let (word, mask) = (col / 64, 1u64 << (col % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| work[r * wpr + word] & mask != 0) else {
                continue;
            };
            for w in 0..wpr {
                work.swap(rank * wpr + w, pivot * wpr + w);
            }
            for r in 0..self.rows {
                if r != rank && work[r * wpr + word] & mask != 0 {
                    for w in 0..wpr {
                        let x = work[rank * wpr + w];
                        work[r * wpr + w] ^= x;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Matrix product over GF(2); self is (m x n), rhs is (n x k).
    pub fn mul(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in GF(2) product");
        let mut out = Gf2Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for (w, &word) in self.row(r).iter().enumerate() {
                let mut bitset = word;
                while bitset != 0 {
                    let j = w * 64 + bitset.trailing_zeros() as usize;
                    bitset &= bitset - 1;
                    let (dst, src) = (r * out.words_per_row, j * rhs.words_per_row);
                    for t in 0..out.words_per_row {
                        out.bits[dst + t] ^= rhs.bits[src + t];
                    }
                }
            }
        }
        out
    }

    /// Row bit strings ('0'/'1'); column order is the generator list order.
    pub fn bit_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| if self.get(r, c) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

/// Rank of a GF(2) matrix; deterministic elimination.
pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// What happened to one sign-choice candidate (k1, k2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateStatus {
    /// A residue vanished mod p; no bundle parameter exists for this choice.
    DegenerateZero,
    /// The solution set leaves {(0,0)} + corners; no 1-dimensional moduli.
    NotMinimal,
    /// Minimal solution set; the Dirac parity of this candidate counts.
    Valid,
}

/// Evidence for one of the four sign choices of a boundary matrix element.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateEvidence {
    /// Sign choice (s_l, s_m) applied to the labels.
    pub signs: (i8, i8),
    /// Minimal positive representatives, when neither residue is zero.
    pub kpair: Option<(u64, u64)>,
    pub status: CandidateStatus,
    /// Lattice counts for non-degenerate candidates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<LatticeCounts>,
    /// Dirac solution count and (a,b) witnesses for valid candidates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dirac_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dirac_witnesses: Option<Vec<(u64, u64)>>,
}

/// Full evidence for one boundary matrix element.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryEvidence {
    pub l: u64,
    pub m: u64,
    pub value: u8,
    /// The valid candidate whose Dirac parity produced the value.
    pub chosen: Option<(u64, u64)>,
    pub candidates: Vec<CandidateEvidence>,
}

fn sign_candidates(l: u64, m: u64, p: u64, r: u64) -> [((i8, i8), u64, u64); 4] {
    let rl = (r as u128 * l as u128 % p as u128) as u64;
    let rm = (r as u128 * m as u128 % p as u128) as u64;
    // k1 = s_l l + s_m m, k2 = r (s_m m - s_l l) mod p
    [
        ((1, 1), (l + m) % p, (rm + p - rl) % p),
        ((1, -1), (l + p - m) % p, (2 * p - rm - rl) % p),
        ((-1, 1), (m + p - l) % p, (rm + rl) % p),
        ((-1, -1), (2 * p - l - m) % p, (rl + p - rm) % p),
    ]
}

/// Boundary matrix element <d rho_l, rho_m> with full per-candidate
/// evidence. Requires canonical labels and a grading gap of 2 mod 8.
pub fn boundary_element(l: u64, m: u64, y: &LensSpace) -> Result<(u8, BoundaryEvidence)> {
    let half = (y.p() - 1) / 2;
    if l == 0 || l > half || m == 0 || m > half {
        return Err(Error::domain(format!(
            "labels must lie in [1, {half}], got l = {l}, m = {m}"
        )));
    }
    let dl = grading(l, y)?;
    let dm = grading(m, y)?;
    if (dl.value() as i64 - dm.value() as i64).rem_euclid(8) != 2 {
        return Err(Error::domain(format!(
            "boundary element needs delta(l) - delta(m) = 2 mod 8, got {} - {}",
            dl, dm
        )));
    }
    element_with_evidence(l, m, y)
}

/// The shared evidence-producing search; also used for the theta arrows of
/// the gamma complex, where one label is 0.
pub(crate) fn element_with_evidence(
    l: u64,
    m: u64,
    y: &LensSpace,
) -> Result<(u8, BoundaryEvidence)> {
    let p = y.p();
    let r = y.q_inverse();
    let mut candidates = Vec::with_capacity(4);
    let mut value: Option<(u8, (u64, u64))> = None;
    let mut seen = Vec::new();
    for (signs, k1, k2) in sign_candidates(l, m, p, r) {
        if k1 == 0 || k2 == 0 {
            candidates.push(CandidateEvidence {
                signs,
                kpair: None,
                status: CandidateStatus::DegenerateZero,
                counts: None,
                dirac_count: None,
                dirac_witnesses: None,
            });
            continue;
        }
        if seen.contains(&(k1, k2)) {
            continue; // degenerate label 0 collapses sign choices
        }
        seen.push((k1, k2));
        let kp = KPair::new(k1, k2)?;
        let counts = count_lattice(&kp, y);
        if !counts.minimal {
            candidates.push(CandidateEvidence {
                signs,
                kpair: Some((k1, k2)),
                status: CandidateStatus::NotMinimal,
                counts: Some(counts),
                dirac_count: None,
                dirac_witnesses: None,
            });
            continue;
        }
        let witnesses = dirac_solutions(&kp, y);
        let parity = (witnesses.len() % 2) as u8;
        match value {
            None => value = Some((parity, (k1, k2))),
            Some((prev, prev_k)) if prev != parity => {
                return Err(Error::inconsistency(format!(
                    "valid candidates {prev_k:?} and ({k1},{k2}) for <d rho_{l}, rho_{m}> \
                     on {y} disagree in Dirac parity"
                )));
            }
            Some(_) => {}
        }
        candidates.push(CandidateEvidence {
            signs,
            kpair: Some((k1, k2)),
            status: CandidateStatus::Valid,
            counts: Some(counts),
            dirac_count: Some(witnesses.len() as u64),
            dirac_witnesses: Some(witnesses),
        });
    }
    let (value, chosen) = match value {
        Some((parity, kp)) => (parity, Some(kp)),
        None => (0, None),
    };
    Ok((
        value,
        BoundaryEvidence {
            l,
            m,
            value,
            chosen,
            candidates,
        },
    ))
}

/// Fast boundary parity for the bulk assembly; table-backed, no evidence.
fn boundary_parity_fast(
    l: u64,
    m: u64,
    tables: &LatticeTables,
    r: u64,
    y: &LensSpace,
) -> Result<u8> {
    let p = tables.p();
    let mut value: Option<(u8, (u64, u64))> = None;
    for (_, k1, k2) in sign_candidates(l, m, p, r) {
        if k1 == 0 || k2 == 0 || !tables.is_minimal(k1, k2) {
            continue;
        }
        let parity = tables.dirac_parity(k1, k2);
        match value {
            None => value = Some((parity, (k1, k2))),
            Some((prev, prev_k)) if prev != parity => {
                return Err(Error::inconsistency(format!(
                    "valid candidates {prev_k:?} and ({k1},{k2}) for <d rho_{l}, rho_{m}> \
                     on {y} disagree in Dirac parity"
                )));
            }
            Some(_) => {}
        }
    }
    Ok(value.map_or(0, |(parity, _)| parity))
}

/// The assembled Z/4-graded GF(2) Floer complex.
///
/// `boundaries[i]` is the matrix of d: C_i -> C_{i-1} (rows indexed by the
/// generators of C_{i-1}, columns by those of C_i, both in label order);
/// indices wrap mod 4. `homology[i]` = dim ker d_i - rank d_{i+1}.
#[derive(Debug, Clone)]
pub struct FloerComplexData {
    pub y: LensSpace,
    pub generators: [Vec<FlatClass>; 4],
    pub boundaries: [Gf2Matrix; 4],
    pub homology: [usize; 4],
}

impl FloerComplexData {
    pub fn dims(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.generators[i].len())
    }

    pub fn homology_vanishes(&self) -> bool {
        self.homology.iter().all(|&h| h == 0)
    }
}

/// Build the full complex: bucket U(1) classes by delta/2 mod 4, fill each
/// boundary matrix, verify every consecutive composition vanishes, compute
/// homology dimensions.
pub fn assemble_complex(y: &LensSpace) -> Result<FloerComplexData> {
    let p = y.p();
    let half = (p - 1) / 2;
    let r = y.q_inverse();
    let tables = LatticeTables::new(y);

    let deltas: Vec<u8> = (1..=half)
        .into_par_iter()
        .map(|l| {
            let k2 = (p - (r as u128 * l as u128 % p as u128) as u64) % p;
            tables.delta_mod8(l, k2)
        })
        .collect();

    let mut generators: [Vec<FlatClass>; 4] = Default::default();
    for class in enumerate_classes(y).into_iter().skip(1) {
        let delta = deltas[(class.l - 1) as usize];
        if delta % 2 != 0 {
            return Err(Error::inconsistency(format!(
                "odd grading {delta} for rho_{} on {y}; gradings must be even for odd p",
                class.l
            )));
        }
        generators[(delta / 2) as usize % 4].push(class);
    }

    let boundaries: [Gf2Matrix; 4] = {
        let mut out = Vec::with_capacity(4);
        for i in 0..4 {
            let sources = &generators[i];
            let targets = &generators[(i + 3) % 4];
            let words = sources.len().div_ceil(64);
            let rows: Vec<Vec<u64>> = targets
                .par_iter()
                .map(|target| {
                    let mut row = vec![0u64; words];
                    for (c, source) in sources.iter().enumerate() {
                        if boundary_parity_fast(source.l, target.l, &tables, r, y)? == 1 {
                            row[c / 64] |= 1 << (c % 64);
                        }
                    }
                    Ok(row)
                })
                .collect::<Result<_>>()?;
            out.push(Gf2Matrix::from_bit_rows(rows, sources.len()));
        }
        out.try_into().expect("exactly four matrices")
    };

    for i in 0..4 {
        // d_i o d_{i+1}: C_{i+1} -> C_{i-1}
        if !boundaries[i].mul(&boundaries[(i + 1) % 4]).is_zero() {
            return Err(Error::inconsistency(format!(
                "boundary composition d_{i} o d_{} is nonzero on {y}",
                (i + 1) % 4
            )));
        }
    }

    let ranks: [usize; 4] = [0, 1, 2, 3].map(|i| boundaries[i].rank());
    let homology: [usize; 4] =
        [0, 1, 2, 3].map(|i| generators[i].len() - ranks[i] - ranks[(i + 1) % 4]);

    Ok(FloerComplexData {
        y: *y,
        generators,
        boundaries,
        homology,
    })
}

impl Serialize for FloerComplexData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(5))?;
        map.serialize_entry("p", &self.y.p())?;
        map.serialize_entry("q", &self.y.q())?;
        let generators: BTreeMap<String, &Vec<FlatClass>> = (0..4)
            .map(|i| (i.to_string(), &self.generators[i]))
            .collect();
        map.serialize_entry("generators", &generators)?;
        let boundary: BTreeMap<String, Vec<String>> = (0..4)
            .map(|i| (i.to_string(), self.boundaries[i].bit_rows()))
            .collect();
        map.serialize_entry("boundary", &boundary)?;
        let homology: BTreeMap<String, usize> =
            (0..4).map(|i| (i.to_string(), self.homology[i])).collect();
        map.serialize_entry("homology", &homology)?;
        map.end()
    }
}
