//! Closed-form semisimplicity criteria for the Hecke, walled Brauer and Brauer
//! algebras, and drivers that check them against the Gram and JSF engines.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::diagalg::{gram_determinant, AlgebraDescriptor};
use crate::error::{Error, Result};
use crate::jsf::{ParamRegime, QClass};
use crate::rootdata::{build_root_system, LieKind, LieType, Weight};
use crate::scalars::{is_prime, ExactInt, Field, FieldValue};
use crate::tilting::{analyze_endomorphism, weyl_factors_mixed, weyl_factors_tensor_power};

/// The parameter `delta` with its reduction `delta_p` (`|delta|` in
/// characteristic 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaParams {
    characteristic: u64,
    delta: ExactInt,
    delta_p: u64,
}

impl DeltaParams {
    pub fn new(characteristic: u64, delta: ExactInt) -> Result<Self> {
        let delta_p = if characteristic == 0 {
            delta.abs()
        } else {
            if !is_prime(characteristic) {
                return Err(Error::domain(format!("characteristic {characteristic} is not prime")));
            }
            delta.mod_floor(&BigInt::from(characteristic))
        };
        let delta_p = delta_p
            .to_u64()
            .ok_or_else(|| Error::domain(format!("delta = {delta} is out of range")))?;
        Ok(DeltaParams {
            characteristic,
            delta,
            delta_p,
        })
    }

    /// From a field element: an integer over Q, a residue over F_p.
    pub fn from_value(delta: &FieldValue) -> Result<Self> {
        match delta {
            FieldValue::Rational(r) => {
                if !r.is_integer() {
                    return Err(Error::domain(format!("delta = {r} is not an integer")));
                }
                DeltaParams::new(0, r.to_integer())
            }
            FieldValue::Residue { p, value } => DeltaParams::new(*p, BigInt::from(*value)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn delta(&self) -> &ExactInt {
        &self.delta
    }

    pub fn delta_p(&self) -> u64 {
        self.delta_p
    }
}

impl fmt::Display for DeltaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "char {}, delta = {}, delta_p = {}",
            self.characteristic, self.delta, self.delta_p
        )
    }
}

/// Semisimplicity of the type A Hecke algebra on `d` strands.
pub fn hecke_a_criterion(d: usize, regime: ParamRegime) -> bool {
    let d = d as u64;
    match regime.q_class() {
        QClass::One => regime.characteristic() == 0 || regime.characteristic() > d,
        QClass::RootOfUnity(ell) => ell > d,
        QClass::NonRoot => true,
    }
}

/// Same conditions as type A.
pub fn hecke_b_criterion(d: usize, regime: ParamRegime) -> bool {
    hecke_a_criterion(d, regime)
}

/// Semisimplicity of the walled Brauer algebra `B_{r,s}(delta)`.
///
/// With `r = 0` or `s = 0` the algebra is a symmetric group algebra and
/// Maschke's theorem decides.
pub fn walled_brauer_criterion(r: usize, s: usize, dp: &DeltaParams) -> bool {
    let p = dp.characteristic;
    let dlt = dp.delta_p;
    let n = (r + s) as u64;
    if r == 0 || s == 0 {
        return p == 0 || n < p;
    }
    let small = matches!((r, s), (2, 1) | (1, 2) | (3, 1) | (1, 3));
    match (p, dlt) {
        (0, 0) => small,
        (0, d0) => n <= d0 + 1,
        (2, 0) => false,
        (3, 0) => matches!((r, s), (2, 1) | (1, 2)),
        (_, 0) => small,
        (p, d) => n <= (d + 1).min(p - d + 1),
    }
}

/// Semisimplicity of the Brauer algebra `B_d(delta)`.
///
/// In characteristic 0 with `delta < 0` the bound is the large-`p` limit of
/// the positive characteristic cases with `delta_p = p + delta`.
pub fn brauer_criterion(d: usize, dp: &DeltaParams) -> bool {
    let p = dp.characteristic;
    let dlt = dp.delta_p;
    let d = d as u64;
    if p == 2 {
        return d == 1;
    }
    if p == 0 {
        if dp.delta.is_zero() {
            return matches!(d, 1 | 3 | 5);
        }
        if dp.delta.is_positive() {
            return d <= dlt + 1;
        }
        // delta_p = p - |delta| has the parity opposite to |delta|
        return if dlt % 2 == 0 { d <= dlt / 2 + 1 } else { d <= dlt + 3 };
    }
    if dlt == 0 {
        return matches!(d, 1 | 3 | 5) && d < p;
    }
    if dlt % 2 == 1 {
        // d <= (p - delta_p + 2) / 2, both sides doubled
        d <= dlt + 1 && 2 * d <= p - dlt + 2
    } else {
        d <= (dlt + 1).min(p - dlt + 3).min(p - 1)
    }
}

/// Closed-form verdict for a concrete algebra. `None` for `q = -1`, which the
/// criteria exclude.
pub fn closed_form(desc: &AlgebraDescriptor) -> Result<Option<bool>> {
    Ok(match desc {
        AlgebraDescriptor::HeckeA { d, q } => ParamRegime::from_q(q)?.map(|r| hecke_a_criterion(*d, r)),
        AlgebraDescriptor::HeckeB { d, q } => ParamRegime::from_q(q)?.map(|r| hecke_b_criterion(*d, r)),
        AlgebraDescriptor::Brauer { d, delta } => Some(brauer_criterion(*d, &DeltaParams::from_value(delta)?)),
        AlgebraDescriptor::WalledBrauer { r, s, delta } => {
            Some(walled_brauer_criterion(*r, *s, &DeltaParams::from_value(delta)?))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Gram,
    Jsf,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Gram => "gram",
            Engine::Jsf => "jsf",
        })
    }
}

/// Result of one engine on one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Verdict { semisimple: bool, detail: String },
    Skipped(String),
    Failed(String),
}

impl Outcome {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Outcome::Verdict { semisimple, .. } => Some(*semisimple),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CrossReport {
    pub cell: AlgebraDescriptor,
    pub closed_form: Option<bool>,
    pub gram: Option<Outcome>,
    pub jsf: Option<Outcome>,
}

impl CrossReport {
    /// Every pair of verdicts present agrees.
    pub fn agrees(&self) -> bool {
        let verdicts: Vec<bool> = [self.closed_form, self.gram_verdict(), self.jsf_verdict()]
            .into_iter()
            .flatten()
            .collect();
        verdicts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn gram_verdict(&self) -> Option<bool> {
        self.gram.as_ref().and_then(Outcome::verdict)
    }

    pub fn jsf_verdict(&self) -> Option<bool> {
        self.jsf.as_ref().and_then(Outcome::verdict)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CrossOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub basis_cap: usize,
    /// Largest tensor-space dimension `n` the JSF route may pick.
    pub max_rank: usize,
}

impl Default for CrossOptions {
    fn default() -> Self {
        CrossOptions {
            jobs: 0,
            basis_cap: crate::diagalg::DEFAULT_BASIS_CAP,
            max_rank: 24,
        }
    }
}

/// Evaluate every cell with the closed form and the requested engines.
/// Reports come back in input order.
pub fn cross_validate(
    cells: &[AlgebraDescriptor],
    engines: &[Engine],
    opts: CrossOptions,
) -> Result<Vec<CrossReport>> {
    if engines.is_empty() {
        return Err(Error::domain("no engine selected"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    pool.install(|| cells.par_iter().map(|cell| evaluate_cell(cell, engines, opts)).collect())
}

fn evaluate_cell(cell: &AlgebraDescriptor, engines: &[Engine], opts: CrossOptions) -> Result<CrossReport> {
    let closed = closed_form(cell)?;
    let gram = engines.contains(&Engine::Gram).then(|| gram_outcome(cell, opts));
    let jsf = engines.contains(&Engine::Jsf).then(|| jsf_outcome(cell, opts));
    Ok(CrossReport {
        cell: cell.clone(),
        closed_form: closed,
        gram,
        jsf,
    })
}

fn gram_outcome(cell: &AlgebraDescriptor, opts: CrossOptions) -> Outcome {
    match gram_determinant(cell, opts.basis_cap) {
        Ok(det) => Outcome::Verdict {
            semisimple: !det.is_zero(),
            detail: format!("det = {det}"),
        },
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

/// The tensor space whose endomorphism algebra is isomorphic to the cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JsfRoute {
    /// `V^{(x)d}` for the given type and rank.
    Power { kind: LieKind, rank: usize, d: usize },
    /// All powers `V^{(x)k}`, `k <= d`, of gl_rank: the `gl + gl` picture.
    Powers { rank: usize, d: usize },
    /// `V^{(x)r} (x) (V*)^{(x)s}` for gl_rank.
    Mixed { rank: usize, r: usize, s: usize },
}

impl fmt::Display for JsfRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsfRoute::Power { kind: LieKind::A, rank, d } => write!(f, "gl_{rank}, V^{d}"),
            JsfRoute::Power { kind, rank, d } => write!(f, "{kind}{rank}, V^{d}"),
            JsfRoute::Powers { rank, d } => write!(f, "gl_{rank} + gl_{rank}, V^k for k <= {d}"),
            JsfRoute::Mixed { rank, r, s } => write!(f, "gl_{rank}, V^{r} (x) V*^{s}"),
        }
    }
}

/// Pick a route whose Schur-Weyl map is an isomorphism, or say why none is
/// available.
pub fn jsf_route(cell: &AlgebraDescriptor, max_rank: usize) -> std::result::Result<(JsfRoute, ParamRegime), String> {
    let map_err = |e: Error| e.to_string();
    match cell {
        AlgebraDescriptor::HeckeA { d, q } | AlgebraDescriptor::HeckeB { d, q } => {
            let regime = ParamRegime::from_q(q).map_err(map_err)?.ok_or("q = -1 is excluded")?;
            if *d > max_rank {
                return Err(format!("rank {d} exceeds the cap {max_rank}"));
            }
            let route = if matches!(cell, AlgebraDescriptor::HeckeA { .. }) {
                JsfRoute::Power { kind: LieKind::A, rank: *d, d: *d }
            } else {
                if q.is_one() && regime.characteristic() == 2 {
                    return Err("type B Hecke algebra at q = 1 needs p != 2".into());
                }
                JsfRoute::Powers { rank: *d, d: *d }
            };
            Ok((route, regime))
        }
        AlgebraDescriptor::WalledBrauer { r, s, delta } => {
            let dp = DeltaParams::from_value(delta).map_err(map_err)?;
            let p = dp.characteristic as usize;
            let need = (r + s).max(1);
            let n = if p == 0 {
                let n = dp.delta_p as usize;
                if n < need {
                    return Err(format!("n = |delta| = {n} is below r + s"));
                }
                n
            } else {
                let mut n = dp.delta_p as usize;
                while n < need {
                    n += p;
                }
                n
            };
            if n > max_rank {
                return Err(format!("rank {n} exceeds the cap {max_rank}"));
            }
            let regime = ParamRegime::new(dp.characteristic, QClass::One).map_err(map_err)?;
            Ok((JsfRoute::Mixed { rank: n, r: *r, s: *s }, regime))
        }
        AlgebraDescriptor::Brauer { d, delta } => {
            let dp = DeltaParams::from_value(delta).map_err(map_err)?;
            let p = dp.characteristic as usize;
            let regime = ParamRegime::new(dp.characteristic, QClass::One).map_err(map_err)?;
            let (kind, n) = match p {
                0 => {
                    let v = dp.delta.to_i64().ok_or("delta out of range")?;
                    if v > 0 && v % 2 == 1 && v as usize >= (*d).max(5) {
                        (LieKind::B, v as usize)
                    } else if v < 0 && v % 2 == 0 && (-v) as usize >= (2 * d).max(4) {
                        (LieKind::C, (-v) as usize)
                    } else {
                        return Err(format!("no type B or C realization for delta = {v}"));
                    }
                }
                2 => {
                    if dp.delta_p != 0 {
                        return Err("odd delta in characteristic 2 needs type D".into());
                    }
                    (LieKind::C, (2 * d).max(4))
                }
                _ => {
                    // odd n with n = delta_p mod p; p odd so one of two lifts is odd
                    let mut n = dp.delta_p as usize;
                    while n < (*d).max(5) || n % 2 == 0 {
                        n += p;
                    }
                    (LieKind::B, n)
                }
            };
            if n > max_rank {
                return Err(format!("n = {n} exceeds the cap {max_rank}"));
            }
            Ok((JsfRoute::Power { kind, rank: n / 2, d: *d }, regime))
        }
    }
}

/// Semisimplicity of the endomorphism algebra along a route, with the first
/// non-simple Weyl factor if any.
pub fn jsf_verdict(route: &JsfRoute, regime: ParamRegime) -> Result<(bool, Option<Weight>)> {
    let system = |kind, rank| build_root_system(LieType::new(kind, rank)?);
    let verdicts = match *route {
        JsfRoute::Power { kind, rank, d } => {
            vec![analyze_endomorphism(&weyl_factors_tensor_power(&system(kind, rank)?, d)?, regime)?]
        }
        JsfRoute::Powers { rank, d } => {
            let sys = system(LieKind::A, rank)?;
            (1..=d)
                .map(|k| analyze_endomorphism(&weyl_factors_tensor_power(&sys, k)?, regime))
                .collect::<Result<Vec<_>>>()?
        }
        JsfRoute::Mixed { rank, r, s } => {
            vec![analyze_endomorphism(&weyl_factors_mixed(&system(LieKind::A, rank)?, r, s)?, regime)?]
        }
    };
    for v in verdicts {
        if !v.semisimple {
            return Ok((false, v.witness_weight().cloned()));
        }
    }
    Ok((true, None))
}

fn jsf_outcome(cell: &AlgebraDescriptor, opts: CrossOptions) -> Outcome {
    let (route, regime) = match jsf_route(cell, opts.max_rank) {
        Ok(x) => x,
        Err(reason) => return Outcome::Skipped(reason),
    };
    match jsf_verdict(&route, regime) {
        Ok((semisimple, witness)) => Outcome::Verdict {
            semisimple,
            detail: match witness {
                Some(w) => format!("{route}; witness {w}"),
                None => format!("{route}"),
            },
        },
        Err(Error::Unsupported(msg)) => Outcome::Skipped(msg),
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

/// Hecke cells: every `q` in `F_p^*` except `-1`, plus `q = 1` over Q.
pub fn hecke_grid(type_b: bool, ds: &[usize], primes: &[u64]) -> Result<Vec<AlgebraDescriptor>> {
    let make = |d: usize, q: FieldValue| {
        if type_b {
            AlgebraDescriptor::HeckeB { d, q }
        } else {
            AlgebraDescriptor::HeckeA { d, q }
        }
    };
    let mut cells = Vec::new();
    for &d in ds {
        for &p in primes {
            for q in Field::prime(p)?.units()? {
                if ParamRegime::from_q(&q)?.is_some() {
                    cells.push(make(d, q));
                }
            }
        }
        cells.push(make(d, Field::Rationals.one()));
    }
    Ok(cells)
}

/// Brauer or walled Brauer cells over Q and each `F_p` for every `delta`.
/// `sizes` holds `(d, 0)` for Brauer and `(r, s)` for walled Brauer.
pub fn delta_grid(
    walled: bool,
    sizes: &[(usize, usize)],
    deltas: &[i64],
    primes: &[u64],
) -> Result<Vec<AlgebraDescriptor>> {
    let mut fields = vec![Field::Rationals];
    for &p in primes {
        fields.push(Field::prime(p)?);
    }
    let mut cells = Vec::new();
    for &(a, b) in sizes {
        for &field in &fields {
            let mut seen = Vec::new();
            for &delta in deltas {
                let delta = field.from_int(delta);
                if seen.contains(&delta) {
                    continue;
                }
                seen.push(delta.clone());
                cells.push(if walled {
                    AlgebraDescriptor::WalledBrauer { r: a, s: b, delta }
                } else {
                    AlgebraDescriptor::Brauer { d: a, delta }
                });
            }
        }
    }
    Ok(cells)
}

/// Gram determinant over Z read in `F_p` versus the Gram verdict computed
/// directly in `F_p`.
#[derive(Clone, Debug)]
pub struct TransferReport {
    pub det_q: ExactInt,
    pub semisimple_q: bool,
    /// `(p, p divides det_q, Gram verdict over F_p)`.
    pub primes: Vec<(u64, bool, bool)>,
}

impl TransferReport {
    pub fn agrees(&self) -> bool {
        self.primes
            .iter()
            .all(|&(_, divides, ss_p)| ss_p == !divides && ss_p == self.semisimple_q)
    }
}

/// Build the same algebra over Q and over each `F_p` from an integer
/// parameter and compare verdicts.
pub fn transfer_check(
    make: impl Fn(FieldValue) -> AlgebraDescriptor,
    parameter: i64,
    primes: &[u64],
    cap: usize,
) -> Result<TransferReport> {
    let det = gram_determinant(&make(Field::Rationals.from_int(parameter)), cap)?;
    let det_q = det
        .as_rational()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .ok_or_else(|| Error::domain("Gram determinant over Q is not an integer"))?;
    let mut out = Vec::new();
    for &p in primes {
        let fp = Field::prime(p)?;
        let det_p = gram_determinant(&make(fp.from_int(parameter)), cap)?;
        let divides = (&det_q % BigInt::from(p)).is_zero();
        out.push((p, divides, !det_p.is_zero()));
    }
    Ok(TransferReport {
        semisimple_q: !det_q.is_zero(),
        det_q,
        primes: out,
    })
}

#[cfg(test)]
mod tests;
