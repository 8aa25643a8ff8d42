//! Example configurations with closed-form invariants.
//!
//! `A_{d,b}` has columns `e_1, …, e_{d−1}`, `e_1 + e_d, …, e_{d−1} + e_d` and
//! `b·e_d`. Its volume is `b + d − 1`, and along the line through `b·e_d` the
//! rank reaches `(d − 1)b + 1`, so the ratio of maximal rank to volume tends
//! to `d − 1` as `b` grows.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::lattice::{int_vector, IntVector};
use crate::polytope::{validate, Configuration};
use crate::ranking::{Parameter, RankEngine, RankingError, Simplicity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Ranking(#[from] RankingError),
}

/// Parameters `(d, b)` of `A_{d,b}` with `d ≥ 3` and `b ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    d: usize,
    b: u64,
}

impl FamilySpec {
    pub fn new(d: usize, b: u64) -> Result<FamilySpec, FamilyError> {
        if d < 3 {
            return Err(FamilyError::InvalidSpec(format!("d = {d} < 3")));
        }
        if b < 2 {
            return Err(FamilyError::InvalidSpec(format!("b = {b} < 2")));
        }
        Ok(FamilySpec { d, b })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// The matrix `A_{d,b}` in its printed column order.
    pub fn build(&self) -> Configuration {
        build(self)
    }

    /// Index of the column `b·e_d`, the face `F_b`.
    pub fn fb_index(&self) -> usize {
        2 * self.d - 2
    }

    pub fn expected_volume(&self) -> BigInt {
        BigInt::from(self.b) + BigInt::from(self.d) - 1
    }

    pub fn expected_max_rank(&self) -> BigInt {
        BigInt::from(self.d - 1) * BigInt::from(self.b) + 1
    }

    /// `((d − 1)b + 1) / (b + d − 1)`.
    pub fn expected_ratio(&self) -> BigRational {
        BigRational::new(self.expected_max_rank(), self.expected_volume())
    }

    /// Rank on the line `m·e_k + C e_d` for `0 ≤ m ≤ b − 1`.
    pub fn expected_line_rank(&self, m: u64) -> BigInt {
        assert!(m < self.b);
        self.expected_volume() + BigInt::from(self.b - 1 - m) * BigInt::from(self.d - 2)
    }
}

fn unit(d: usize, k: usize) -> IntVector {
    let mut v = vec![BigInt::from(0); d];
    v[k] = BigInt::from(1);
    v
}

pub fn build(spec: &FamilySpec) -> Configuration {
    let d = spec.d;
    let mut cols: Vec<IntVector> = (0..d - 1).map(|k| unit(d, k)).collect();
    for k in 0..d - 1 {
        let mut c = unit(d, k);
        c[d - 1] = BigInt::from(1);
        cols.push(c);
    }
    let mut top = vec![BigInt::from(0); d];
    top[d - 1] = BigInt::from(spec.b);
    cols.push(top);
    validate(cols).expect("A_{d,b} satisfies the standing hypotheses")
}

/// The plane configuration `(1,0), (1,1), (0,2), (0,3)`, extended by
/// `(0,k)` columns and raised by pyramids to reach `d` rows and `n` columns.
///
/// The base has `n − d + 2` columns; each pyramid step appends a zero row and
/// a new unit column. The volume is `n − d + 2`.
pub fn build_noncm_example(d: usize, n: usize) -> Result<Configuration, FamilyError> {
    if d < 2 {
        return Err(FamilyError::InvalidSpec(format!("d = {d} < 2")));
    }
    if n < d + 2 {
        return Err(FamilyError::InvalidSpec(format!("n = {n} < d + 2 = {}", d + 2)));
    }
    let base_n = n - (d - 2);
    let mut cols: Vec<IntVector> = [[1, 0], [1, 1], [0, 2], [0, 3]].iter().map(|c| int_vector(c)).collect();
    cols.extend((4..base_n as i64).map(|k| int_vector(&[0, k])));
    for level in 2..d {
        for c in cols.iter_mut() {
            c.push(BigInt::from(0));
        }
        cols.push(unit(level + 1, level));
    }
    validate(cols).map_err(|e| FamilyError::InvalidSpec(e.to_string()))
}

/// A line `base + C e_d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExceptionalLine {
    pub base: IntVector,
    pub direction: IntVector,
}

impl ExceptionalLine {
    /// Whether an integer point lies on the line.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let d = v.len();
        v[..d - 1] == self.base[..d - 1]
    }
}

/// The lines `m·e_k + C e_d`, `k < d`, `0 ≤ m ≤ b − 2`, with the line through
/// the origin listed once: `(d − 1)(b − 2) + 1` lines.
pub fn exceptional_lines(spec: &FamilySpec) -> Vec<ExceptionalLine> {
    let d = spec.d;
    let direction = unit(d, d - 1);
    let mut lines = vec![ExceptionalLine {
        base: vec![BigInt::from(0); d],
        direction: direction.clone(),
    }];
    for k in 0..d - 1 {
        for m in 1..spec.b.saturating_sub(1) {
            let mut base = vec![BigInt::from(0); d];
            base[k] = BigInt::from(m);
            lines.push(ExceptionalLine {
                base,
                direction: direction.clone(),
            });
        }
    }
    lines
}

/// Every line `p + C e_d` with `p ∈ N^{d−1}` and `p_1 + … + p_{d−1} ≤ b − 2`.
///
/// These are the translates of `C F_b` through holes of `NA`. For `b ≤ 3`
/// they are exactly [`exceptional_lines`]; for `b ≥ 4` the set also holds
/// lines whose base has two or more nonzero coordinates, such as
/// `(1, 1, 0) + C e_3` for `A_{3,4}`.
pub fn jump_lines(spec: &FamilySpec) -> Vec<ExceptionalLine> {
    let d = spec.d;
    let cap = spec.b - 2;
    let direction = unit(d, d - 1);
    let mut out = Vec::new();
    let mut p = vec![0u64; d - 1];
    loop {
        if p.iter().sum::<u64>() <= cap {
            let mut base: IntVector = p.iter().map(|&x| BigInt::from(x)).collect();
            base.push(BigInt::from(0));
            out.push(ExceptionalLine {
                base,
                direction: direction.clone(),
            });
        }
        let mut i = 0;
        loop {
            if i == d - 1 {
                out.sort();
                return out;
            }
            p[i] += 1;
            if p[i] <= cap {
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// Deterministic integer parameters, off every jump line whenever `b ≤ 20`.
/// The first `d − 1` coordinates are `7 + i, 11 + i, 13 + i, …` and the last
/// is `(13 i mod 17) − 4`, which is negative for some samples.
pub fn off_line_samples(spec: &FamilySpec, count: usize) -> Vec<Parameter> {
    const STEPS: [i64; 8] = [7, 11, 13, 17, 19, 23, 29, 31];
    (1..=count as i64)
        .map(|i| {
            let mut v: Vec<i64> = (0..spec.d - 1).map(|k| STEPS[k % STEPS.len()] + i).collect();
            v.push((13 * i).rem_euclid(17) - 4);
            Parameter::from_i64(&v)
        })
        .collect()
}

/// The rank on one candidate line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCheck {
    /// 0-based coordinate `k` of the base point `m·e_k`.
    pub k: usize,
    pub m: u64,
    pub rank: BigInt,
    pub expected_rank: BigInt,
    /// `m ≤ b − 2`: the rank should exceed the volume.
    pub expects_jump: bool,
    pub simple_for_fb: bool,
}

impl LineCheck {
    /// The rank matches, and a jump comes from `F_b` alone.
    pub fn ok(&self) -> bool {
        self.rank == self.expected_rank && (self.simple_for_fb || !self.expects_jump)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCheck {
    pub beta: Parameter,
    pub rank: BigInt,
}

/// The family's closed forms compared with the general engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub computed_vol: BigInt,
    pub expected_vol: BigInt,
    pub computed_max_rank: BigInt,
    pub expected_max_rank: BigInt,
    pub rank_at_origin: BigInt,
    pub origin_simple_for_fb: bool,
    pub exceptional_lines: Vec<ExceptionalLine>,
    pub line_checks: Vec<LineCheck>,
    pub off_line_checks: Vec<SampleCheck>,
    pub ratio: BigRational,
    pub all_match: bool,
}

/// Runs the engine on `A_{d,b}`: the volume, the rank at `β = 0`, the rank
/// on `m·e_k + C e_d` for `0 ≤ m ≤ b − 1` (the jump must vanish at
/// `m = b − 1`), and the rank at `samples` parameters off the lines.
pub fn verify(spec: &FamilySpec, samples: usize) -> Result<FamilyReport, FamilyError> {
    let a = spec.build();
    let mut engine = RankEngine::new(&a);
    let vol = engine.volume().clone();
    let fb = spec.fb_index();
    let is_fb = |s: &Simplicity| matches!(s, Simplicity::Simple(g) if g.indices == [fb]);

    let origin = engine.rank(&Parameter::zero(spec.d))?;
    let origin_simple_for_fb = is_fb(&origin.simplicity);
    let mut max_rank = origin.rank.clone();

    let mut line_checks = Vec::new();
    for k in 0..spec.d - 1 {
        for m in 0..spec.b {
            let mut beta = vec![0i64; spec.d];
            beta[k] = m as i64;
            let report = engine.rank(&Parameter::from_i64(&beta))?;
            max_rank = max_rank.max(report.rank.clone());
            line_checks.push(LineCheck {
                k,
                m,
                simple_for_fb: is_fb(&report.simplicity),
                rank: report.rank,
                expected_rank: spec.expected_line_rank(m),
                expects_jump: m + 2 <= spec.b,
            });
        }
    }

    let mut off_line_checks = Vec::new();
    for beta in off_line_samples(spec, samples) {
        let report = engine.rank(&beta)?;
        max_rank = max_rank.max(report.rank.clone());
        off_line_checks.push(SampleCheck { beta, rank: report.rank });
    }

    let expected_vol = spec.expected_volume();
    let expected_max_rank = spec.expected_max_rank();
    let lines_ok = line_checks.iter().all(LineCheck::ok);
    let all_match = vol == expected_vol
        && origin.rank == expected_max_rank
        && max_rank == expected_max_rank
        && origin_simple_for_fb
        && lines_ok
        && off_line_checks.iter().all(|c| c.rank == vol);
    Ok(FamilyReport {
        spec: *spec,
        ratio: BigRational::new(max_rank.clone(), vol.clone()),
        computed_vol: vol,
        expected_vol,
        computed_max_rank: max_rank,
        expected_max_rank,
        rank_at_origin: origin.rank,
        origin_simple_for_fb,
        exceptional_lines: exceptional_lines(spec),
        line_checks,
        off_line_checks,
        all_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::volume;

    #[test]
    fn printed_matrix() {
        let a = FamilySpec::new(3, 2).unwrap().build();
        let expect: Vec<IntVector> =
            [[1, 0, 0], [0, 1, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]].iter().map(|c| int_vector(c)).collect();
        assert_eq!(a.columns(), &expect[..]);
        let a = FamilySpec::new(4, 5).unwrap().build();
        assert_eq!((a.d(), a.n()), (4, 7));
        assert_eq!(a.column(6), &int_vector(&[0, 0, 0, 5]));
    }

    #[test]
    fn invalid_specs() {
        assert!(FamilySpec::new(3, 1).is_err());
        assert!(FamilySpec::new(2, 5).is_err());
        assert!(build_noncm_example(2, 3).is_err());
        assert!(build_noncm_example(1, 4).is_err());
    }

    #[test]
    fn noncm_volumes() {
        for (d, n, v) in [(2, 4, 4), (2, 5, 5), (2, 6, 6), (3, 5, 4), (4, 7, 5)] {
            let a = build_noncm_example(d, n).unwrap();
            assert_eq!((a.d(), a.n()), (d, n));
            assert_eq!(volume(&a), BigInt::from(v));
        }
    }

    #[test]
    fn line_counts() {
        for (d, b) in [(3, 2), (3, 3), (4, 2), (5, 7)] {
            let s = FamilySpec::new(d, b).unwrap();
            assert_eq!(exceptional_lines(&s).len() as u64, (d as u64 - 1) * (b - 2) + 1);
        }
        let s = FamilySpec::new(3, 3).unwrap();
        let bases: Vec<_> = exceptional_lines(&s).into_iter().map(|l| l.base).collect();
        assert_eq!(bases, vec![int_vector(&[0, 0, 0]), int_vector(&[1, 0, 0]), int_vector(&[0, 1, 0])]);
        assert_eq!(jump_lines(&s).len(), 3);
        assert_eq!(jump_lines(&FamilySpec::new(3, 4).unwrap()).len(), 6);
    }

    #[test]
    fn smallest_member() {
        let r = verify(&FamilySpec::new(3, 2).unwrap(), 3).unwrap();
        assert!(r.all_match, "{r:?}");
        assert_eq!(r.ratio, BigRational::new(5.into(), 4.into()));
    }
}
