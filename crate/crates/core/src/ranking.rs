//! Ranking lattices and the rank of simple parameters.
//!
//! For a face `F` and a rational parameter `β`, the representatives
//! `B_F^β` index the translates `b + ZF` that meet the flat `β + QF` and
//! avoid `NA + ZF`. The pairs `(F, b)` over all faces form `J(β)`. When the
//! pairs that are maximal under inclusion of translates all carry the same
//! face `G`, the parameter is simple and
//!
//! `rank = vol(A) + |B_G^β| · (codim G − 1) · vol_{ZG}(G)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{coset_representatives, IntVector, Sublattice};
use crate::polytope::{faces, volume, volume_in_saturation, volume_in_span, Configuration, Face};
use crate::semigroup::{FaceQuotient, QuotientSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("parameter has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter is not simple: {} maximal ranking pairs on several faces", .0.maximal_pairs.len())]
    NotSimple(Box<NotSimpleReport>),
    #[error("parameter is simple for {found}, not for {requested}")]
    WrongFace { requested: String, found: String },
}

/// What is known about a parameter that is not simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSimpleReport {
    pub beta: Parameter,
    pub volume: BigInt,
    pub pairs: Vec<RankingPair>,
    pub maximal_pairs: Vec<RankingPair>,
}

/// A rational parameter vector `β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parameter {
    beta: Vec<BigRational>,
}

impl Parameter {
    pub fn new(beta: Vec<BigRational>) -> Parameter {
        Parameter { beta }
    }

    pub fn zero(d: usize) -> Parameter {
        Parameter::new(vec![BigRational::zero(); d])
    }

    pub fn from_integers(v: &[BigInt]) -> Parameter {
        Parameter::new(v.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn from_i64(v: &[i64]) -> Parameter {
        Parameter::new(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.beta.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.beta
    }

    /// The integer vector, when every entry is an integer.
    pub fn as_integers(&self) -> Option<IntVector> {
        self.beta
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// `β + v`.
    pub fn translate(&self, v: &[BigInt]) -> Parameter {
        Parameter::new(
            self.beta
                .iter()
                .zip(v)
                .map(|(b, x)| b + BigRational::from_integer(x.clone()))
                .collect(),
        )
    }
}

impl FromStr for Parameter {
    type Err = RankingError;

    /// Comma-separated integers or fractions `p/q`, e.g. `1/2,0,-3`.
    fn from_str(s: &str) -> Result<Parameter, RankingError> {
        if s.trim().is_empty() {
            return Err(RankingError::InvalidParameter("empty parameter".into()));
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                BigRational::from_str(t).map_err(|_| RankingError::InvalidParameter(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Parameter::new)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.beta.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A ranking pair `(F, b)`: the translate `b + ZF` meets `β + QF` and
/// misses `NA + ZF`. The representative is reduced modulo `ZF`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingPair {
    pub face: Face,
    pub rep: IntVector,
    /// `ZF`.
    pub lattice: Sublattice,
}

/// Outcome of the simpleness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    /// No ranking pairs: the rank is the volume.
    Empty,
    /// Every maximal pair carries this face.
    Simple(Face),
    NotSimple,
}

/// One inequality `lhs ≤ rhs` (or `<` when strict), with `slack = rhs − lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub strict: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub slack: BigRational,
    pub holds: bool,
}

impl BoundCheck {
    fn new(name: &'static str, applicable: bool, strict: bool, lhs: BigRational, rhs: BigRational) -> BoundCheck {
        let slack = &rhs - &lhs;
        let holds = if strict { slack > BigRational::zero() } else { slack >= BigRational::zero() };
        BoundCheck {
            name,
            applicable,
            strict,
            lhs,
            rhs,
            slack,
            holds,
        }
    }

    /// A check counts as passed when it is inapplicable or holds.
    pub fn ok(&self) -> bool {
        !self.applicable || self.holds
    }
}

/// The three rank bounds for a simple parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBounds {
    /// `rank ≤ codim(G) · vol(A)`.
    pub codim_volume: BoundCheck,
    /// `rank ≤ codim(G) · vol(A) − (codim(G) − 1)(n − |G| − codim(G))`.
    pub pyramid_corrected: BoundCheck,
    /// `rank / vol(A) < d − 1`, for parameters with a positive jump.
    pub ratio: BoundCheck,
}

impl RankBounds {
    pub fn all(&self) -> [&BoundCheck; 3] {
        [&self.codim_volume, &self.pyramid_corrected, &self.ratio]
    }

    pub fn all_ok(&self) -> bool {
        self.all().iter().all(|b| b.ok())
    }
}

/// Everything computed for one simple parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub beta: Parameter,
    pub volume: BigInt,
    pub pairs: Vec<RankingPair>,
    pub maximal_pairs: Vec<RankingPair>,
    pub simplicity: Simplicity,
    /// `G`, or the full face when there are no pairs.
    pub simple_face: Option<Face>,
    pub b_count: usize,
    pub rank: BigInt,
    /// `rank − vol(A)`.
    pub jump: BigInt,
    pub bounds: RankBounds,
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

fn int(x: usize) -> BigInt {
    BigInt::from(x)
}

/// Evaluates the bounds for `rank` against a simple face `g`.
///
/// The codimension bounds need `d ≥ 3` and a proper face; the ratio bound
/// needs `d ≥ 3` and a positive jump.
pub fn evaluate_bounds(a: &Configuration, vol: &BigInt, rank: &BigInt, g: &Face) -> RankBounds {
    let d = a.d();
    let codim = int(g.codim);
    let excess = int(a.n()) - int(g.len()) - &codim;
    let proper = d >= 3 && g.codim > 0;
    let first = &codim * vol;
    let second = &first - (&codim - BigInt::one()) * &excess;
    let jumping = d >= 3 && rank > vol;
    RankBounds {
        codim_volume: BoundCheck::new("rank <= codim(G)*vol(A)", proper, false, rat(rank), rat(&first)),
        pyramid_corrected: BoundCheck::new(
            "rank <= codim(G)*vol(A) - (codim(G)-1)(n-|G|-codim(G))",
            proper,
            false,
            rat(rank),
            rat(&second),
        ),
        ratio: BoundCheck::new(
            "rank/vol(A) < d-1",
            jumping,
            true,
            BigRational::new(rank.clone(), vol.clone()),
            rat(&int(d - 1)),
        ),
    }
}

/// Per-face data reused across parameters.
struct FaceData {
    face: Face,
    lattice: Sublattice,
    quotient: FaceQuotient,
    semigroup: QuotientSemigroup,
    shifts: Vec<IntVector>,
}

/// Caches faces, volumes and membership tables for repeated queries on one
/// configuration. The tables are mutable, so an engine serves one task.
pub struct RankEngine<'a> {
    a: &'a Configuration,
    volume: BigInt,
    faces: Vec<FaceData>,
}

impl<'a> RankEngine<'a> {
    pub fn new(a: &'a Configuration) -> RankEngine<'a> {
        let faces = faces(a)
            .into_iter()
            .map(|face| {
                let lattice = a.span_lattice(&face.indices);
                let shifts = coset_representatives(&lattice, &lattice.saturate())
                    .expect("a lattice has finite index in its saturation")
                    .representatives;
                FaceData {
                    quotient: FaceQuotient::new(&lattice),
                    semigroup: QuotientSemigroup::new(&face, a).expect("enumerated faces are faces"),
                    face,
                    lattice,
                    shifts,
                }
            })
            .collect();
        RankEngine {
            a,
            volume: volume(a),
            faces,
        }
    }

    pub fn configuration(&self) -> &Configuration {
        self.a
    }

    pub fn volume(&self) -> &BigInt {
        &self.volume
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().map(|f| &f.face)
    }

    fn check(&self, beta: &Parameter) -> Result<(), RankingError> {
        if beta.dim() == self.a.d() {
            Ok(())
        } else {
            Err(RankingError::DimensionMismatch {
                expected: self.a.d(),
                found: beta.dim(),
            })
        }
    }

    fn face_slot(&self, face: &Face) -> usize {
        self.faces
            .iter()
            .position(|f| f.face.indices == face.indices)
            .unwrap_or_else(|| panic!("{} is not a face", face.label()))
    }

    fn b_at(&mut self, beta: &Parameter, slot: usize) -> Vec<IntVector> {
        let data = &mut self.faces[slot];
        let free = data.quotient.rational_free_part(beta.entries());
        if free.iter().any(|x| !x.is_integer()) {
            return Vec::new();
        }
        let free: IntVector = free.iter().map(BigRational::to_integer).collect();
        let base = data.quotient.lift_free(&free);
        let mut out: Vec<IntVector> = Vec::new();
        for t in &data.shifts {
            let c: IntVector = base.iter().zip(t).map(|(x, y)| x + y).collect();
            if !data.semigroup.contains(&c) {
                out.push(data.lattice.reduce(&c));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// `B_F^β`, reduced modulo `ZF` and sorted.
    pub fn b_f_beta(&mut self, beta: &Parameter, face: &Face) -> Result<Vec<IntVector>, RankingError> {
        self.check(beta)?;
        let slot = self.face_slot(face);
        Ok(self.b_at(beta, slot))
    }

    /// `J(β)`, ordered by face and then by representative.
    pub fn ranking_pairs(&mut self, beta: &Parameter) -> Result<Vec<RankingPair>, RankingError> {
        self.check(beta)?;
        let mut pairs = Vec::new();
        for slot in 0..self.faces.len() {
            for rep in self.b_at(beta, slot) {
                pairs.push(RankingPair {
                    face: self.faces[slot].face.clone(),
                    rep,
                    lattice: self.faces[slot].lattice.clone(),
                });
            }
        }
        Ok(pairs)
    }

    fn simplicity_of(&mut self, beta: &Parameter) -> Result<(Vec<RankingPair>, Vec<RankingPair>, Simplicity), RankingError> {
        let pairs = self.ranking_pairs(beta)?;
        let maximal = maximal_pairs(&pairs);
        let simplicity = match maximal.first() {
            None => Simplicity::Empty,
            Some(p) if maximal.iter().all(|q| q.face == p.face) => Simplicity::Simple(p.face.clone()),
            Some(_) => Simplicity::NotSimple,
        };
        Ok((pairs, maximal, simplicity))
    }

    pub fn simplicity(&mut self, beta: &Parameter) -> Result<Simplicity, RankingError> {
        Ok(self.simplicity_of(beta)?.2)
    }

    /// Rank of a simple parameter, with its ranking data and bound checks.
    pub fn rank(&mut self, beta: &Parameter) -> Result<RankReport, RankingError> {
        let (pairs, maximal, simplicity) = self.simplicity_of(beta)?;
        let (g, b_count) = match &simplicity {
            Simplicity::Empty => (self.faces.last().expect("A is a face").face.clone(), 0),
            Simplicity::Simple(g) => (g.clone(), pairs.iter().filter(|p| p.face == *g).count()),
            Simplicity::NotSimple => {
                return Err(RankingError::NotSimple(Box::new(NotSimpleReport {
                    beta: beta.clone(),
                    volume: self.volume.clone(),
                    pairs,
                    maximal_pairs: maximal,
                })))
            }
        };
        let jump = if b_count == 0 || g.codim <= 1 {
            BigInt::zero()
        } else {
            int(b_count) * int(g.codim - 1) * volume_in_span(&g.indices, self.a)
        };
        let rank = &self.volume + &jump;
        let bounds = evaluate_bounds(self.a, &self.volume, &rank, &g);
        Ok(RankReport {
            beta: beta.clone(),
            volume: self.volume.clone(),
            pairs,
            maximal_pairs: maximal,
            simplicity,
            simple_face: Some(g),
            b_count,
            rank,
            jump,
            bounds,
        })
    }
}

/// Whether the translate of `p` lies inside the translate of `q`.
pub fn translate_contained(p: &RankingPair, q: &RankingPair) -> bool {
    let diff: IntVector = p.rep.iter().zip(&q.rep).map(|(x, y)| x - y).collect();
    p.lattice.is_sublattice_of(&q.lattice).unwrap_or(false) && q.lattice.contains(&diff).unwrap_or(false)
}

/// Pairs whose translate is not strictly contained in another pair's.
pub fn maximal_pairs(pairs: &[RankingPair]) -> Vec<RankingPair> {
    pairs
        .iter()
        .filter(|p| {
            !pairs
                .iter()
                .any(|q| translate_contained(p, q) && !translate_contained(q, p))
        })
        .cloned()
        .collect()
}

/// `B_F^β` for one face.
pub fn b_f_beta(beta: &Parameter, face: &Face, a: &Configuration) -> Result<Vec<IntVector>, RankingError> {
    RankEngine::new(a).b_f_beta(beta, face)
}

pub fn ranking_pairs(beta: &Parameter, a: &Configuration) -> Result<Vec<RankingPair>, RankingError> {
    RankEngine::new(a).ranking_pairs(beta)
}

/// The simple face: `G` when every maximal pair carries it, the full face
/// when there are no pairs, `None` otherwise.
pub fn is_simple(beta: &Parameter, a: &Configuration) -> Result<Option<Face>, RankingError> {
    let mut engine = RankEngine::new(a);
    Ok(match engine.simplicity(beta)? {
        Simplicity::Empty => engine.faces().last().cloned(),
        Simplicity::Simple(g) => Some(g),
        Simplicity::NotSimple => None,
    })
}

pub fn rank_simple(beta: &Parameter, a: &Configuration) -> Result<RankReport, RankingError> {
    RankEngine::new(a).rank(beta)
}

/// Bounds for `β` simple with respect to `g`.
pub fn rank_bounds(beta: &Parameter, g: &Face, a: &Configuration) -> Result<RankBounds, RankingError> {
    let report = rank_simple(beta, a)?;
    let found = report.simple_face.as_ref().expect("simple reports carry a face");
    if found.indices != g.indices {
        return Err(RankingError::WrongFace {
            requested: g.label(),
            found: found.label(),
        });
    }
    Ok(report.bounds)
}

/// `vol_{Z^d ∩ QF}(F) + n − |F| − codim(F)`, a lower bound for `vol(A)`.
pub fn volume_lower_bound(f: &Face, a: &Configuration) -> BigInt {
    volume_in_saturation(&f.indices, a) + int(a.n()) - int(f.len()) - int(f.codim)
}
