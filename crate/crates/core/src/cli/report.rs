//! Serializable reports. Integers and rationals are decimal strings, face
//! indices are 1-based column numbers, and every report names its schema.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::family::FamilyReport;
use crate::lattice::IntVector;
use crate::polytope::Face;
use crate::ranking::{BoundCheck, NotSimpleReport, RankReport, RankingPair, Simplicity};

pub const SCHEMA_PREFIX: &str = "gkz-rank";

pub fn schema(name: &str) -> String {
    format!("{SCHEMA_PREFIX}/{name}/v1")
}

pub fn int(x: &BigInt) -> String {
    x.to_string()
}

/// `p/q` in lowest terms with `q > 0`, or `p` when `q = 1`.
pub fn rational(x: &BigRational) -> String {
    x.to_string()
}

pub fn vector(v: &[BigInt]) -> Vec<String> {
    v.iter().map(int).collect()
}

pub fn labels(face: &Face) -> Vec<usize> {
    face.indices.iter().map(|j| j + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub schema: String,
    pub d: usize,
    pub n: usize,
    pub columns: Vec<Vec<String>>,
    pub facet_normals: Vec<Vec<String>>,
    pub positivity_functional: Vec<String>,
    pub face_count: usize,
    pub vol: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeReport {
    pub schema: String,
    /// 1-based columns of `F`; all columns when absent.
    pub face: Vec<usize>,
    /// `vol_{ZF}(F)`.
    pub vol_span: String,
    /// `vol_{Z^d ∩ QF}(F)`.
    pub vol_saturation: String,
    /// `[Z^d ∩ QF : ZF]`.
    pub index: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub columns: Vec<usize>,
    pub normal: Vec<String>,
    pub dim: usize,
    pub codim: usize,
    pub vol_span: String,
    pub vol_saturation: String,
    pub lower_bound: String,
    pub pyramid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesReport {
    pub schema: String,
    pub vol: String,
    pub faces: Vec<FaceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub schema: String,
    pub normal: bool,
    pub hilbert_basis: Vec<Vec<String>>,
    /// Hilbert basis elements outside `NA`.
    pub missing: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolesReport {
    pub schema: String,
    #[serde(rename = "box")]
    pub bounds: BoxJson,
    pub holes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub face: Vec<usize>,
    pub rep: Vec<String>,
}

impl From<&RankingPair> for PairJson {
    fn from(p: &RankingPair) -> PairJson {
        PairJson {
            face: labels(&p.face),
            rep: vector(&p.rep),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub name: String,
    pub applicable: bool,
    pub strict: bool,
    pub lhs: String,
    pub rhs: String,
    pub slack: String,
    pub holds: bool,
}

impl From<&BoundCheck> for BoundJson {
    fn from(b: &BoundCheck) -> BoundJson {
        BoundJson {
            name: b.name.to_string(),
            applicable: b.applicable,
            strict: b.strict,
            lhs: rational(&b.lhs),
            rhs: rational(&b.rhs),
            slack: rational(&b.slack),
            holds: b.holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankJson {
    pub schema: String,
    pub beta: Vec<String>,
    pub vol: String,
    pub pairs: Vec<PairJson>,
    pub maximal_pairs: Vec<PairJson>,
    /// `empty`, `simple` or `not_simple`.
    pub simplicity: String,
    pub simple_face: Option<Vec<usize>>,
    pub b_count: String,
    pub jump: String,
    pub rank: String,
    pub bounds: Vec<BoundJson>,
}

impl From<&RankReport> for RankJson {
    fn from(r: &RankReport) -> RankJson {
        RankJson {
            schema: schema("rank"),
            beta: r.beta.entries().iter().map(rational).collect(),
            vol: int(&r.volume),
            pairs: r.pairs.iter().map(PairJson::from).collect(),
            maximal_pairs: r.maximal_pairs.iter().map(PairJson::from).collect(),
            simplicity: match r.simplicity {
                Simplicity::Empty => "empty",
                Simplicity::Simple(_) => "simple",
                Simplicity::NotSimple => "not_simple",
            }
            .into(),
            simple_face: r.simple_face.as_ref().map(labels),
            b_count: r.b_count.to_string(),
            jump: int(&r.jump),
            rank: int(&r.rank),
            bounds: r.bounds.all().iter().map(|b| BoundJson::from(*b)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotSimpleJson {
    pub beta: Vec<String>,
    pub vol: String,
    pub pairs: Vec<PairJson>,
    pub maximal_pairs: Vec<PairJson>,
}

impl From<&NotSimpleReport> for NotSimpleJson {
    fn from(r: &NotSimpleReport) -> NotSimpleJson {
        NotSimpleJson {
            beta: r.beta.entries().iter().map(rational).collect(),
            vol: int(&r.volume),
            pairs: r.pairs.iter().map(PairJson::from).collect(),
            maximal_pairs: r.maximal_pairs.iter().map(PairJson::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundJson {
    pub face: Vec<usize>,
    pub bound: String,
    pub holds: bool,
    pub equality: bool,
    pub pyramid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub schema: String,
    pub beta: Vec<String>,
    pub vol: String,
    pub rank: String,
    pub simple_face: Option<Vec<usize>>,
    pub bounds: Vec<BoundJson>,
    pub volume_lower_bounds: Vec<LowerBoundJson>,
    pub all_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineJson {
    pub base: Vec<String>,
    pub direction: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCheckJson {
    /// 1-based coordinate of the base point `m·e_k`.
    pub k: usize,
    pub m: u64,
    pub rank: String,
    pub expected_rank: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleJson {
    pub beta: Vec<String>,
    pub rank: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub schema: String,
    pub d: usize,
    pub b: u64,
    pub computed_vol: String,
    pub expected_vol: String,
    pub computed_max_rank: String,
    pub expected_max_rank: String,
    pub rank_at_origin: String,
    pub ratio: String,
    pub exceptional_lines: Vec<LineJson>,
    pub line_checks: Vec<LineCheckJson>,
    pub off_line: Vec<SampleJson>,
    pub all_match: bool,
}

impl From<&FamilyReport> for FamilyJson {
    fn from(r: &FamilyReport) -> FamilyJson {
        FamilyJson {
            schema: schema("family-verify"),
            d: r.spec.d(),
            b: r.spec.b(),
            computed_vol: int(&r.computed_vol),
            expected_vol: int(&r.expected_vol),
            computed_max_rank: int(&r.computed_max_rank),
            expected_max_rank: int(&r.expected_max_rank),
            rank_at_origin: int(&r.rank_at_origin),
            ratio: rational(&r.ratio),
            exceptional_lines: r
                .exceptional_lines
                .iter()
                .map(|l| LineJson {
                    base: vector(&l.base),
                    direction: vector(&l.direction),
                })
                .collect(),
            line_checks: r
                .line_checks
                .iter()
                .map(|c| LineCheckJson {
                    k: c.k + 1,
                    m: c.m,
                    rank: int(&c.rank),
                    expected_rank: int(&c.expected_rank),
                    ok: c.ok(),
                })
                .collect(),
            off_line: r
                .off_line_checks
                .iter()
                .map(|c| SampleJson {
                    beta: c.beta.entries().iter().map(rational).collect(),
                    rank: int(&c.rank),
                    ok: c.rank == r.computed_vol,
                })
                .collect(),
            all_match: r.all_match,
        }
    }
}

/// Error object written to the error stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub schema: String,
    pub error: String,
    pub message: String,
    pub status: i32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ranking: Option<NotSimpleJson>,
}

/// Parses a vector of decimal strings.
pub fn parse_vector(v: &[String]) -> Option<IntVector> {
    v.iter().map(|s| s.parse().ok()).collect()
}
