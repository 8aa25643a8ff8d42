//! The ten acceptance criteria, each printed as one PASS or FAIL line.
//! Runs with its own harness: `cargo test --test acceptance`.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::{
    all_box_points, brute_hilbert_basis, brute_holes, brute_parallelepiped, det_laplace, small_fixtures, zonotope_box,
    NaiveSemigroup, V,
};
use gkz_rank::family::{build_noncm_example, jump_lines, off_line_samples, FamilySpec};
use gkz_rank::lattice::int_vector;
use gkz_rank::polytope::{face_of, faces, is_pyramid, validate, volume, volume_in_span, Configuration};
use gkz_rank::ranking::{volume_lower_bound, Parameter, RankEngine, RankingError, Simplicity};
use gkz_rank::semigroup::{
    delta_bounding_box, hilbert_basis, holes_in_box, is_normal, parallelepiped_points, IntBox, MembershipIndex,
};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid() -> impl Iterator<Item = FamilySpec> {
    (3..=6).flat_map(|d| (2..=12).map(move |b| FamilySpec::new(d, b).unwrap()))
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn ratio(p: &BigInt, q: &BigInt) -> BigRational {
    BigRational::new(p.clone(), q.clone())
}

fn volume_closed_form() -> Outcome {
    let mut cells = 0;
    for spec in grid() {
        let v = volume(&spec.build());
        ensure(v == spec.expected_volume(), || {
            format!("A_{{{},{}}}: vol {v}, expected {}", spec.d(), spec.b(), spec.expected_volume())
        })?;
        cells += 1;
    }
    Ok(format!("{cells} grid cells"))
}

fn rank_closed_form() -> Outcome {
    for spec in grid() {
        let a = spec.build();
        let r = RankEngine::new(&a).rank(&Parameter::zero(spec.d())).map_err(|e| e.to_string())?;
        ensure(r.rank == spec.expected_max_rank(), || {
            format!("A_{{{},{}}}: rank {}, expected {}", spec.d(), spec.b(), r.rank, spec.expected_max_rank())
        })?;
        ensure(
            matches!(&r.simplicity, Simplicity::Simple(g) if g.indices == [spec.fb_index()]),
            || format!("A_{{{},{}}}: simple face is not F_b", spec.d(), spec.b()),
        )?;
    }
    Ok("rank (d-1)b+1 with simple face F_b on every cell".into())
}

fn ratio_convergence() -> Outcome {
    let spec = FamilySpec::new(5, 1000).unwrap();
    let a = spec.build();
    let r = RankEngine::new(&a).rank(&Parameter::zero(5)).map_err(|e| e.to_string())?;
    let q = ratio(&r.rank, &r.volume);
    ensure(q == ratio(&int(4001), &int(1004)), || format!("ratio {q}"))?;
    ensure(q > ratio(&int(398), &int(100)), || format!("ratio {q} <= 3.98"))?;
    for spec in grid() {
        let a = spec.build();
        let r = RankEngine::new(&a).rank(&Parameter::zero(spec.d())).map_err(|e| e.to_string())?;
        let q = ratio(&r.rank, &r.volume);
        let limit = BigRational::from_integer(BigInt::from(spec.d() - 1));
        ensure(q < limit, || format!("A_{{{},{}}}: ratio {q} >= {limit}", spec.d(), spec.b()))?;
    }
    Ok("4001/1004 > 3.98; every grid ratio < d-1".into())
}

fn exceptional_arrangement() -> Outcome {
    let mut checked = 0;
    for (d, b) in [(3, 3), (4, 3), (3, 4)] {
        let spec = FamilySpec::new(d, b).unwrap();
        let a = spec.build();
        let mut engine = RankEngine::new(&a);
        let vol = engine.volume().clone();
        for k in 0..d - 1 {
            for m in 0..b {
                let mut beta = vec![0i64; d];
                beta[k] = m as i64;
                let r = engine.rank(&Parameter::from_i64(&beta)).map_err(|e| e.to_string())?;
                let expected = spec.expected_line_rank(m);
                ensure(r.rank == expected, || format!("A_{{{d},{b}}} at {beta:?}: rank {}, expected {expected}", r.rank))?;
                ensure((r.rank > vol) == (m + 2 <= b), || format!("A_{{{d},{b}}} at {beta:?}: jump pattern"))?;
                checked += 1;
            }
        }
        let samples = off_line_samples(&spec, 20);
        let lines = jump_lines(&spec);
        for beta in samples {
            let v = beta.as_integers().unwrap();
            ensure(!lines.iter().any(|l| l.contains(&v)), || format!("sample {beta} lies on a jump line"))?;
            let r = engine.rank(&beta).map_err(|e| e.to_string())?;
            ensure(r.rank == vol, || format!("A_{{{d},{b}}} off-line β = ({beta}): rank {}", r.rank))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} parameters"))
}

fn plane_example() -> Outcome {
    let a = validate(vec![int_vector(&[1, 0]), int_vector(&[1, 1]), int_vector(&[0, 2]), int_vector(&[0, 3])])
        .map_err(|e| e.to_string())?;
    ensure(volume(&a) == int(4), || "vol != 4".into())?;
    ensure(!is_normal(&a), || "plane example reported normal".into())?;
    let holes = holes_in_box(&a, &IntBox::cube(2, 0, 8)).unwrap().holes;
    ensure(holes == vec![int_vector(&[0, 1])], || format!("holes {holes:?}"))?;
    for n in [5, 6] {
        let a = build_noncm_example(2, n).map_err(|e| e.to_string())?;
        ensure(volume(&a) == int(n as i64), || format!("n = {n}: vol {}", volume(&a)))?;
    }
    let p = build_noncm_example(3, 5).map_err(|e| e.to_string())?;
    ensure(volume(&p) == int(4), || "pyramid vol != 4".into())?;
    let base = face_of(&p, &[0, 1, 2, 3]).ok_or("embedded base is not a face")?;
    ensure(is_pyramid(&base, &p), || "pyramid not detected".into())?;
    Ok("vol 4, hole (0,1), n = 5,6 extensions, pyramid".into())
}

fn lower_bound_fixtures() -> Vec<(String, Configuration)> {
    let mut out: Vec<(String, Configuration)> =
        grid().map(|s| (format!("A_{{{},{}}}", s.d(), s.b()), s.build())).collect();
    for (d, n) in [(2, 4), (2, 5), (2, 6), (3, 5)] {
        out.push((format!("plane example ({d},{n})"), build_noncm_example(d, n).unwrap()));
    }
    for d in 1..=6 {
        out.push((format!("unit simplex {d}"), common::unit_simplex(d)));
    }
    out
}

fn lower_bound_suite() -> Outcome {
    let mut face_count = 0;
    for (name, a) in lower_bound_fixtures() {
        let vol = volume(&a);
        for f in faces(&a) {
            let lb = volume_lower_bound(&f, &a);
            ensure(vol >= lb, || format!("{name}, face {}: {lb} > vol {vol}", f.label()))?;
            face_count += 1;
        }
    }
    for spec in grid() {
        let a = spec.build();
        let fb = face_of(&a, &[spec.fb_index()]).ok_or("F_b is not a face")?;
        ensure(volume_lower_bound(&fb, &a) == volume(&a), || format!("no equality on A_{{{},{}}}", spec.d(), spec.b()))?;
        ensure(!is_pyramid(&fb, &a), || "A_{d,b} reported as a pyramid over F_b".into())?;
    }
    Ok(format!("{face_count} faces; equality without pyramid on every (A_{{d,b}}, F_b)"))
}

#[derive(Default)]
struct NormalityStats {
    configurations: usize,
    non_normal: usize,
    /// `vol = n − d + 1` but not normal.
    minimal_volume_failures: Vec<Vec<V>>,
    /// Non-normal with `d < 2` or `n < d + 2`.
    shape_failures: Vec<Vec<V>>,
    /// Non-normal with `vol < n − d + 2`.
    volume_failures: Vec<Vec<V>>,
}

impl NormalityStats {
    fn record(&mut self, a: &Configuration) {
        let (d, n) = (a.d() as i64, a.n() as i64);
        let vol = volume(a);
        let normal = is_normal(a);
        self.configurations += 1;
        if vol == int(n - d + 1) && !normal {
            self.minimal_volume_failures.push(a.columns().to_vec());
        }
        if !normal {
            self.non_normal += 1;
            if d < 2 || n < d + 2 {
                self.shape_failures.push(a.columns().to_vec());
            }
            if vol < int(n - d + 2) {
                self.volume_failures.push(a.columns().to_vec());
            }
        }
    }
}

fn normality_sweep() -> Outcome {
    let points: Vec<V> = all_box_points(&[0, 0], &[3, 3]).into_iter().filter(|p| !p.iter().all(Zero::is_zero)).collect();
    let mut plane = NormalityStats::default();
    for n in 2..=5usize {
        for subset in (0..points.len()).combinations(n) {
            let cols: Vec<V> = subset.iter().map(|&i| points[i].clone()).collect();
            if let Ok(a) = validate(cols) {
                plane.record(&a);
            }
        }
    }
    let pool: Vec<V> =
        all_box_points(&[0, 0, 0], &[2, 2, 2]).into_iter().filter(|p| !p.iter().all(Zero::is_zero)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut space = NormalityStats::default();
    while space.configurations < 300 {
        let n = rng.gen_range(3..=6);
        let cols: Vec<V> = pool.choose_multiple(&mut rng, n).cloned().collect();
        if let Ok(a) = validate(cols) {
            space.record(&a);
        }
    }
    let summary = format!(
        "d = 2: {} configurations, {} non-normal; d = 3: {} sampled, {} non-normal",
        plane.configurations, plane.non_normal, space.configurations, space.non_normal
    );
    let mut problems = Vec::new();
    for (label, s) in [("d = 2", &plane), ("d = 3", &space)] {
        if let Some(c) = s.minimal_volume_failures.first() {
            problems.push(format!("{label}: vol = n-d+1 yet not normal ({} cases, e.g. {c:?})", s.minimal_volume_failures.len()));
        }
        if let Some(c) = s.shape_failures.first() {
            problems.push(format!(
                "{label}: non-normal with n < d+2 ({} of {} non-normal cases, e.g. {c:?})",
                s.shape_failures.len(),
                s.non_normal
            ));
        }
        if let Some(c) = s.volume_failures.first() {
            problems.push(format!("{label}: non-normal with vol < n-d+2 ({} cases, e.g. {c:?})", s.volume_failures.len()));
        }
    }
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", problems.join("; ")))
    }
}

fn oracle_equivalence() -> Outcome {
    let mut checks = 0usize;
    for (name, a) in small_fixtures() {
        let mut naive = NaiveSemigroup::new(a.columns());
        let mut mine = MembershipIndex::new(&a);
        let (lo, hi) = zonotope_box(a.columns());
        let lo: Vec<i64> = lo.iter().map(|x| x - 1).collect();
        for p in all_box_points(&lo, &hi) {
            ensure(mine.contains(&p) == naive.contains(&p), || format!("{name}: membership differs at {p:?}"))?;
            checks += 1;
        }
        let bounds = delta_bounding_box(&a);
        let bl: Vec<i64> = bounds.lower.iter().map(|x| i64::try_from(x).unwrap()).collect();
        let bh: Vec<i64> = bounds.upper.iter().map(|x| i64::try_from(x).unwrap()).collect();
        let mut holes = holes_in_box(&a, &bounds).unwrap().holes;
        holes.sort();
        ensure(holes == brute_holes(a.columns(), &bl, &bh), || format!("{name}: holes differ"))?;
        let mut hb = hilbert_basis(&a);
        hb.sort();
        ensure(hb == brute_hilbert_basis(a.columns()), || format!("{name}: Hilbert bases differ"))?;
        for s in (0..a.n()).combinations(a.d()) {
            let g: Vec<V> = s.iter().map(|&j| a.column(j).clone()).collect();
            if det_laplace(&g).is_zero() {
                continue;
            }
            ensure(parallelepiped_points(&g) == brute_parallelepiped(&g), || format!("{name}: parallelepiped {s:?}"))?;
            checks += 1;
        }
        checks += 2;
    }
    Ok(format!("{checks} comparisons on {} fixtures", small_fixtures().len()))
}

fn e2_spot_check() -> Outcome {
    let spec = FamilySpec::new(4, 10).unwrap();
    let a = spec.build();
    let r = RankEngine::new(&a).rank(&Parameter::zero(4)).map_err(|e| e.to_string())?;
    let g = r.simple_face.clone().unwrap();
    ensure(r.rank == int(31) && r.volume == int(13), || format!("rank {} vol {}", r.rank, r.volume))?;
    ensure(g.codim == 3, || format!("CF_b has codimension {}", g.codim))?;
    ensure(r.rank >= int(2) * &r.volume, || "rank below 2 vol".into())?;

    let mut fixtures: Vec<Configuration> = small_fixtures().into_iter().map(|(_, a)| a).filter(|a| a.d() >= 3).collect();
    fixtures.extend([(4, 2), (4, 3), (5, 2)].iter().map(|&(d, b)| FamilySpec::new(d, b).unwrap().build()));
    let mut tested = 0;
    for a in &fixtures {
        let mut engine = RankEngine::new(a);
        for beta in all_box_points(&vec![-2; a.d()], &vec![3; a.d()]) {
            match engine.rank(&Parameter::from_integers(&beta)) {
                Ok(r) => {
                    let g = r.simple_face.as_ref().unwrap();
                    if g.codim <= 2 {
                        ensure(r.rank < BigInt::from(2) * &r.volume, || {
                            format!("rank {} >= 2 vol on a codim-{} component at {beta:?}", r.rank, g.codim)
                        })?;
                        tested += 1;
                    }
                }
                Err(RankingError::NotSimple(_)) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("A_{{4,10}}: 31 >= 26 on codim 3; {tested} codim <= 2 parameters stay below 2 vol"))
}

fn b_count_inequality() -> Outcome {
    let mut fixtures: Vec<Configuration> = small_fixtures().into_iter().map(|(_, a)| a).collect();
    fixtures.extend([(4, 2), (4, 3)].iter().map(|&(d, b)| FamilySpec::new(d, b).unwrap().build()));
    let mut checks = 0;
    for a in &fixtures {
        let mut engine = RankEngine::new(a);
        let vol = engine.volume().clone();
        let fs: Vec<_> = engine.faces().cloned().collect();
        let mut betas: Vec<Parameter> =
            all_box_points(&vec![-2; a.d()], &vec![2; a.d()]).iter().map(|b| Parameter::from_integers(b)).collect();
        betas.push("1/2,0,0,0,0,0".split(',').take(a.d()).collect::<Vec<_>>().join(",").parse().unwrap());
        for beta in &betas {
            for f in &fs {
                let bs = engine.b_f_beta(beta, f).map_err(|e| e.to_string())?;
                let count = BigInt::from(bs.len());
                let zf = a.span_lattice(&f.indices);
                ensure(count <= zf.index_in_saturation(), || format!("|B| > index on {}", f.label()))?;
                ensure(&count * volume_in_span(&f.indices, a) <= vol, || format!("|B| vol_ZF > vol on {}", f.label()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (face, β) pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("volume closed form b+d-1 on 3<=d<=6, 2<=b<=12", volume_closed_form),
        ("rank (d-1)b+1 at β = 0 with simple face F_b", rank_closed_form),
        ("ratio 4001/1004 > 3.98 and grid ratios < d-1", ratio_convergence),
        ("exceptional lines of A_{3,3}, A_{4,3}, A_{3,4}", exceptional_arrangement),
        ("plane example, extensions and pyramid", plane_example),
        ("volume lower bound over all faces of all fixtures", lower_bound_suite),
        ("normality sweep", normality_sweep),
        ("oracle equivalence on d <= 3 fixtures", oracle_equivalence),
        ("E_2 spot check", e2_spot_check),
        ("B-count inequalities", b_count_inequality),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
