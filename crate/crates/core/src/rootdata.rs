//! Root and weight data of the classical types A_{m-1}, B_m, C_m and D_m in the
//! epsilon basis, with the finite Weyl group acting by signed permutations.
//!
//! Weights have coordinates in `(1/2)Z`. They are stored doubled so that all
//! arithmetic stays in `i64`; conversions to [`ExactRat`] are exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{ExactInt, ExactRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieKind {
    A,
    B,
    C,
    D,
}

impl FromStr for LieKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(LieKind::A),
            "B" => Ok(LieKind::B),
            "C" => Ok(LieKind::C),
            "D" => Ok(LieKind::D),
            other => Err(Error::domain(format!("unknown Lie type {other:?}"))),
        }
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieKind::A => "A",
            LieKind::B => "B",
            LieKind::C => "C",
            LieKind::D => "D",
        };
        f.write_str(s)
    }
}

/// A classical type together with the number `m` of epsilon coordinates.
///
/// For type A the rank parameter is `m` (the root system is A_{m-1}, attached
/// to gl_m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    kind: LieKind,
    rank: usize,
}

impl LieType {
    pub fn new(kind: LieKind, rank: usize) -> Result<Self> {
        let min = match kind {
            LieKind::A => 1,
            LieKind::B | LieKind::C => 2,
            LieKind::D => 4,
        };
        if rank < min {
            return Err(Error::domain(format!(
                "type {kind} needs rank at least {min}, got {rank}"
            )));
        }
        Ok(LieType { kind, rank })
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LieKind::A => write!(f, "A{}", self.rank - 1),
            k => write!(f, "{k}{}", self.rank),
        }
    }
}

/// A weight `sum_i c_i eps_i` with `c_i` in `(1/2)Z`, stored as `2 c_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    pub fn zero(len: usize) -> Self {
        Weight { doubled: vec![0; len] }
    }

    /// Basis vector `eps_i` (zero-based index).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = Weight::zero(len);
        w.doubled[i] = 2;
        w
    }

    /// Build from exact rationals; every denominator must divide 2.
    pub fn from_rationals(coords: &[ExactRat]) -> Result<Self> {
        let two = BigInt::from(2);
        let mut doubled = Vec::with_capacity(coords.len());
        for c in coords {
            let d = c * BigRational::from_integer(two.clone());
            if !d.is_integer() {
                return Err(Error::domain(format!("coordinate {c} is not a half-integer")));
            }
            let v: i64 = d
                .to_integer()
                .try_into()
                .map_err(|_| Error::domain(format!("coordinate {c} out of range")))?;
            doubled.push(v);
        }
        Ok(Weight { doubled })
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn coords(&self) -> Vec<ExactRat> {
        self.doubled
            .iter()
            .map(|&d| BigRational::new(d.into(), 2.into()))
            .collect()
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn int_coords(&self) -> Option<Vec<i64>> {
        self.doubled
            .iter()
            .map(|&d| if d % 2 == 0 { Some(d / 2) } else { None })
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self - k * alpha`.
    pub fn sub_root_multiple(&self, alpha: &Root, k: i64) -> Weight {
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&alpha.coords)
                .map(|(a, r)| a - 2 * k * r)
                .collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{d}/2")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated coordinates such as `3,0,0` or `1/2,1/2,-1/2`; optional
    /// surrounding parentheses are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(Error::domain("empty weight"));
        }
        let mut coords = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let r = match part.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad_coord(part))?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad_coord(part))?;
                    if d.is_zero() {
                        return Err(bad_coord(part));
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(part.parse().map_err(|_| bad_coord(part))?),
            };
            coords.push(r);
        }
        Weight::from_rationals(&coords)
    }
}

fn bad_coord(part: &str) -> Error {
    Error::domain(format!("cannot parse weight coordinate {part:?}"))
}

/// A root as an integer vector in the epsilon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
    positive: bool,
}

impl Root {
    fn new(coords: Vec<i64>) -> Self {
        let positive = coords.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0);
        Root { coords, positive }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// `(alpha, alpha)`.
    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// Coroot `2 alpha / (alpha, alpha)` as exact rationals.
    pub fn coroot(&self) -> Vec<ExactRat> {
        let n = self.norm_sq();
        self.coords
            .iter()
            .map(|&c| BigRational::new((2 * c).into(), n.into()))
            .collect()
    }

    /// `<w, alpha^vee>` as a reduced fraction `(num, den)` with `den > 0`.
    fn pair_doubled(&self, w: &Weight) -> (i64, i64) {
        let dot: i64 = w.doubled.iter().zip(&self.coords).map(|(a, b)| a * b).sum();
        let n = self.norm_sq();
        let g = num_integer::gcd(dot, n);
        (dot / g, n / g)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Root datum of a classical type together with the weights of its natural
/// (vector) representation.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    positive_roots: Vec<Root>,
    rho: Weight,
    vector_rep_weights: Vec<(Weight, u32)>,
    vector_rep_dim: usize,
}

pub fn build_root_system(lie_type: LieType) -> Result<RootSystem> {
    let m = lie_type.rank;
    let kind = lie_type.kind;
    LieType::new(kind, m)?;

    let unit = |i: usize| -> Vec<i64> {
        let mut v = vec![0; m];
        v[i] = 1;
        v
    };
    let combo = |i: usize, j: usize, sign: i64| -> Vec<i64> {
        let mut v = vec![0; m];
        v[i] = 1;
        v[j] = sign;
        v
    };

    let mut positive_roots = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            positive_roots.push(Root::new(combo(i, j, -1)));
        }
    }
    if kind != LieKind::A {
        for i in 0..m {
            for j in i + 1..m {
                positive_roots.push(Root::new(combo(i, j, 1)));
            }
        }
    }
    match kind {
        LieKind::B => positive_roots.extend((0..m).map(|i| Root::new(unit(i)))),
        LieKind::C => positive_roots.extend((0..m).map(|i| {
            let mut v = unit(i);
            v[i] = 2;
            Root::new(v)
        })),
        _ => {}
    }

    let m64 = m as i64;
    let rho = match kind {
        LieKind::A | LieKind::D => Weight::from_doubled((0..m64).map(|i| 2 * (m64 - 1 - i)).collect()),
        LieKind::B => Weight::from_doubled((0..m64).map(|i| 2 * (m64 - i) - 1).collect()),
        LieKind::C => Weight::from_doubled((0..m64).map(|i| 2 * (m64 - i)).collect()),
    };

    let mut vector_rep_weights: Vec<(Weight, u32)> = (0..m).map(|i| (Weight::unit(m, i), 1)).collect();
    if kind != LieKind::A {
        vector_rep_weights.extend((0..m).map(|i| {
            let mut w = Weight::unit(m, i);
            w.doubled[i] = -2;
            (w, 1)
        }));
    }
    if kind == LieKind::B {
        vector_rep_weights.push((Weight::zero(m), 1));
    }
    let vector_rep_dim = match kind {
        LieKind::A => m,
        LieKind::B => 2 * m + 1,
        LieKind::C | LieKind::D => 2 * m,
    };

    Ok(RootSystem {
        lie_type,
        positive_roots,
        rho,
        vector_rep_weights,
        vector_rep_dim,
    })
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn kind(&self) -> LieKind {
        self.lie_type.kind
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn vector_rep_weights(&self) -> &[(Weight, u32)] {
        &self.vector_rep_weights
    }

    /// Dimension `n` of the vector representation.
    pub fn vector_rep_dim(&self) -> usize {
        self.vector_rep_dim
    }

    /// Highest weight `eps_1` of the vector representation.
    pub fn omega1(&self) -> Weight {
        Weight::unit(self.rank(), 0)
    }

    /// Simple roots in the order of the simple reflections `s_1, ..., s_m`.
    pub fn simple_roots(&self) -> Vec<Root> {
        let m = self.rank();
        let mut out: Vec<Root> = (0..m - 1)
            .map(|i| {
                let mut v = vec![0; m];
                v[i] = 1;
                v[i + 1] = -1;
                Root::new(v)
            })
            .collect();
        let mut last = vec![0; m];
        match self.kind() {
            LieKind::A => return out,
            LieKind::B => last[m - 1] = 1,
            LieKind::C => last[m - 1] = 2,
            LieKind::D => {
                last[m - 2] = 1;
                last[m - 1] = 1;
            }
        }
        out.push(Root::new(last));
        out
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "weight {w} has length {}, expected {} for {}",
                w.len(),
                self.rank(),
                self.lie_type
            )))
        }
    }

    /// Membership in the weight lattice X.
    pub fn in_lattice(&self, w: &Weight) -> bool {
        if w.len() != self.rank() {
            return false;
        }
        match self.kind() {
            LieKind::A | LieKind::C => w.doubled.iter().all(|d| d % 2 == 0),
            LieKind::B | LieKind::D => {
                let parity = w.doubled[0].rem_euclid(2);
                w.doubled.iter().all(|d| d.rem_euclid(2) == parity)
            }
        }
    }

    /// Membership in the dominant cone X^+.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        if !self.in_lattice(w) {
            return false;
        }
        let d = &w.doubled;
        let decreasing = |xs: &[i64]| xs.windows(2).all(|p| p[0] >= p[1]);
        match self.kind() {
            LieKind::A => decreasing(d),
            LieKind::B | LieKind::C => decreasing(d) && *d.last().unwrap() >= 0,
            LieKind::D => {
                let m = d.len();
                decreasing(&d[..m - 1]) && d[m - 2] >= d[m - 1].abs()
            }
        }
    }

    /// `<w, alpha^vee>`.
    pub fn pairing(&self, w: &Weight, alpha: &Root) -> Result<ExactRat> {
        self.check_len(w)?;
        if alpha.coords.len() != self.rank() {
            return Err(Error::domain("root of wrong rank"));
        }
        let (n, d) = alpha.pair_doubled(w);
        Ok(BigRational::new(n.into(), d.into()))
    }

    /// `<w, alpha^vee>` when it is an integer.
    pub(crate) fn pairing_int(&self, w: &Weight, alpha: &Root) -> Option<i64> {
        let (n, d) = alpha.pair_doubled(w);
        (d == 1).then_some(n)
    }

    /// Whether `mu + rho` is fixed by a reflection, using the coordinate tests
    /// for classical types.
    pub fn is_dot_singular(&self, mu: &Weight) -> Result<bool> {
        self.check_len(mu)?;
        Ok(self.is_shifted_singular(&mu.add(&self.rho)))
    }

    fn is_shifted_singular(&self, nu: &Weight) -> bool {
        let d = &nu.doubled;
        let m = d.len();
        let pairs = || (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
        match self.kind() {
            LieKind::A => pairs().any(|(i, j)| d[i] == d[j]),
            LieKind::B | LieKind::C => {
                d.contains(&0) || pairs().any(|(i, j)| d[i].abs() == d[j].abs())
            }
            LieKind::D => pairs().any(|(i, j)| d[i].abs() == d[j].abs()),
        }
    }

    /// Move a shifted weight `nu = mu + rho` into the strictly dominant chamber.
    ///
    /// Returns `None` when `nu` lies on a reflecting hyperplane, otherwise
    /// `(det w, w(nu))`. The sign is the parity of the coordinate permutation
    /// times the parity of the sign changes, which equals `(-1)^{l(w)}`.
    pub fn dominant_reduce(&self, nu: &Weight) -> Result<Option<(i32, Weight)>> {
        self.check_len(nu)?;
        if self.is_shifted_singular(nu) {
            return Ok(None);
        }
        let d = &nu.doubled;
        let kind = self.kind();
        let keys: Vec<i64> = match kind {
            LieKind::A => d.clone(),
            _ => d.iter().map(|x| x.abs()).collect(),
        };
        // keys are pairwise distinct here; sorting into decreasing order has
        // parity equal to the number of ascending pairs
        let mut inversions = 0usize;
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i] < keys[j] {
                    inversions += 1;
                }
            }
        }
        let mut sorted = keys.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let flips = d.iter().filter(|&&x| x < 0).count();
        let sign_exp = match kind {
            LieKind::A => inversions,
            LieKind::B | LieKind::C => inversions + flips,
            LieKind::D => {
                // W(D) only changes an even number of signs: an odd count is
                // repaired by leaving the smallest entry negative (a zero
                // entry absorbs the extra flip).
                if flips % 2 == 1 {
                    let last = sorted.len() - 1;
                    sorted[last] = -sorted[last];
                }
                inversions
            }
        };
        let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
        Ok(Some((sign, Weight::from_doubled(sorted))))
    }

    /// Simple reflection `s_i` (one-based, `1..=m` or `1..m` in type A).
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_len(w)?;
        let simple = self.simple_roots();
        let alpha = simple
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::domain(format!("no simple reflection s_{i}")))?;
        let (n, den) = alpha.pair_doubled(w);
        // s(w) = w - <w, alpha^vee> alpha stays in (1/2)Z^m, so the doubled
        // update 2 <w, alpha^vee> alpha_j is integral.
        Ok(Weight::from_doubled(
            w.doubled
                .iter()
                .zip(&alpha.coords)
                .map(|(x, a)| {
                    debug_assert_eq!(2 * n * a % den, 0);
                    x - 2 * n * a / den
                })
                .collect(),
        ))
    }

    /// Dot action `s_i . mu = s_i(mu + rho) - rho`.
    pub fn dot_simple_reflection(&self, i: usize, mu: &Weight) -> Result<Weight> {
        Ok(self.simple_reflection(i, &mu.add(&self.rho))?.sub(&self.rho))
    }

    /// Weyl dimension formula `prod <lambda+rho, a^vee> / <rho, a^vee>`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<ExactInt> {
        self.check_len(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::domain(format!("{lambda} is not dominant for {}", self.lie_type)));
        }
        let shifted = lambda.add(&self.rho);
        let mut acc = BigRational::one();
        for alpha in &self.positive_roots {
            acc *= self.pairing(&shifted, alpha)? / self.pairing(&self.rho, alpha)?;
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }
}
