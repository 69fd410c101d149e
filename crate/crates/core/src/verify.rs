//! Batch identity-verification suites with machine-readable reports.
//!
//! Each suite sweeps a bounded family of cases exhaustively and records any
//! disagreement as a failure (inputs, expected, actual). Default bounds
//! match the acceptance scales; everything is exact, so a suite passes only
//! on exact equality. Case lists run through `exec::map_cases`, which
//! shards across threads under the `parallel` feature.

use std::time::Instant;

use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::exec;
use crate::lambda::{self, LambdaElement};
use crate::multischur::{
    self, fs_function, hook_identity_check, hook_partition, s_multi, s_multi_skew,
    transition_row, Route,
};
use crate::paramseq::ParameterSequence;
use crate::partition::{partitions_in_box, partitions_up_to, subdiagrams, Partition, SkewShape};
use crate::rat::{self, Rat};
use crate::series::Series;
use crate::shifted;
use crate::superpoly::{
    self, diagram_point, eval_lambda, specialize, SpecialValueRoute,
};
use crate::tableaux::{
    self, collection_to_tableau, collection_weight, enumerate_paths, enumerate_primed,
    gessel_viennot_determinant, tableau_to_collection,
};

/// Fixed recorded seed so failures are reproducible.
pub const DEFAULT_SEED: u64 = 20260809;

/// One failed case.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a suite run. `elapsed_ms` is measured and therefore excluded
/// from the serialized report, which must be byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Suite bounds; `None` falls back to the per-suite default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub max_size: Option<u32>,
    pub max_mu: Option<u32>,
    pub max_lambda: Option<u32>,
    pub n: Option<usize>,
    pub seq: Option<ParameterSequence>,
    pub seed: Option<u64>,
}

impl SuiteConfig {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

/// All suite names, as accepted by `run_suite`.
pub const SUITES: &[&str] = &[
    "dim-ratio",
    "phi",
    "jacobi-trudi-vs-combinatorial",
    "sergeev-pragacz",
    "giambelli",
    "duality",
    "vanishing",
    "transition",
    "hook-identity",
    "series",
    "interpolation",
    "paths-bijection",
];

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    match name {
        "dim-ratio" => Ok(suite_dim_ratio(cfg)),
        "phi" => Ok(suite_phi(cfg)),
        "jacobi-trudi-vs-combinatorial" => Ok(suite_combinatorial(cfg)),
        "sergeev-pragacz" => Ok(suite_sergeev_pragacz(cfg)),
        "giambelli" => Ok(suite_route_agreement(cfg)),
        "duality" => Ok(suite_duality(cfg)),
        "vanishing" => Ok(suite_vanishing(cfg)),
        "transition" => Ok(suite_transition(cfg)),
        "hook-identity" => Ok(suite_hook_identity(cfg)),
        "series" => Ok(suite_series(cfg)),
        "interpolation" => Ok(suite_interpolation(cfg)),
        "paths-bijection" => Ok(suite_paths_bijection(cfg)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn finish<T: Sync + Send>(
    suite: &str,
    started: Instant,
    cases: Vec<T>,
    check: impl Fn(&T) -> Option<Failure> + Sync + Send,
) -> VerificationReport {
    let results = exec::map_cases(&cases, check);
    VerificationReport {
        suite: suite.to_string(),
        cases_run: cases.len(),
        failures: results.into_iter().flatten().collect(),
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// A pseudorandom injective table on [-24, 24]: a_i = i + u_i with
/// |u_i| < 1/2, so values strictly increase.
pub fn seeded_table(seed: u64) -> ParameterSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = -24i64;
    let hi = 24i64;
    let dens = [7i64, 11, 13];
    let values = (lo..=hi)
        .map(|i| {
            let num = rng.gen_range(-3..=3i64);
            let den = dens[rng.gen_range(0..dens.len())];
            rat::rint(i) + rat::rq(num, den)
        })
        .collect();
    ParameterSequence::table(lo, values)
}

/// A generic rational point with 2n coordinates, seeded.
pub fn seeded_point(seed: u64, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let num = rng.gen_range(-9..=9i64);
        let den = rng.gen_range(2..=7i64);
        rat::rq(num, den)
    };
    let x = (0..n).map(|_| draw(&mut rng)).collect();
    let y = (0..n).map(|_| draw(&mut rng)).collect();
    (x, y)
}

fn affine_seq() -> ParameterSequence {
    ParameterSequence::affine(rat::rq(1, 3), rat::rint(-2))
}

fn three_sequences() -> Vec<ParameterSequence> {
    vec![ParameterSequence::zero(), ParameterSequence::fs(), affine_seq()]
}

fn chosen_sequences(cfg: &SuiteConfig, default: Vec<ParameterSequence>) -> Vec<ParameterSequence> {
    match &cfg.seq {
        Some(s) => vec![s.clone()],
        None => default,
    }
}

fn fmt_lambda(f: &LambdaElement) -> String {
    format!("{f:?}")
}

/// Criterion: Fs_mu at the modified Frobenius coordinates of nu, divided by
/// (n down m), equals the brute-force relative dimension ratio.
fn suite_dim_ratio(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_mu = cfg.max_mu.unwrap_or(4);
    let max_nu = cfg.max_lambda.unwrap_or(8);
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_mu) {
        for nu in partitions_up_to(max_nu) {
            cases.push((mu.clone(), nu));
        }
    }
    finish("dim-ratio", started, cases, |(mu, nu)| {
        let brute = shifted::dim_ratio_brute(mu, nu);
        let fs = shifted::dim_ratio_fs(mu, nu);
        let sh = shifted::dim_ratio_shifted(mu, nu);
        if fs != brute || sh != brute {
            return Some(Failure {
                inputs: format!("mu={mu} nu={nu}"),
                expected: brute.to_string(),
                actual: format!("fs={fs} shifted={sh}"),
            });
        }
        None
    })
}

/// Criterion: the shifted determinant-ratio evaluation at row coordinates
/// equals Fs_mu at the FS diagram point.
fn suite_phi(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_mu = cfg.max_mu.unwrap_or(5);
    let max_lambda = cfg.max_lambda.unwrap_or(8);
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_mu) {
        for lambda in partitions_up_to(max_lambda) {
            cases.push((mu.clone(), lambda));
        }
    }
    finish("phi", started, cases, |(mu, lambda)| {
        if shifted::phi_check(mu, lambda) {
            None
        } else {
            Some(Failure {
                inputs: format!("mu={mu} lambda={lambda}"),
                expected: "shifted evaluation".into(),
                actual: "frobenius-schur evaluation differs".into(),
            })
        }
    })
}

/// Criterion: the strip sum, the primed-tableau sum, the lattice-path sum
/// and the Gessel-Viennot determinant all equal the evaluated skew
/// determinant, for outer diagrams in a 4x4 box.
///
/// One case covers every n, sequence and evaluation point for a shape pair,
/// so the skew element is built once per sequence and each tableau family
/// is enumerated once per n.
fn suite_combinatorial(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let n_max = cfg.n.unwrap_or(3);
    let seqs = chosen_sequences(
        cfg,
        vec![ParameterSequence::zero(), ParameterSequence::fs(), seeded_table(cfg.seed())],
    );
    // One generic seeded point: route agreement is an identity of exact
    // rational values there.
    let points: Vec<(Vec<Rat>, Vec<Rat>)> =
        vec![seeded_point(cfg.seed().wrapping_add(1), n_max)];
    let mut cases = Vec::new();
    for outer in partitions_in_box(4, 4) {
        for inner in subdiagrams(&outer) {
            cases.push((outer.clone(), inner.clone()));
        }
    }
    let seqs_ref = &seqs;
    let points_ref = &points;
    finish("jacobi-trudi-vs-combinatorial", started, cases, move |(outer, inner)| {
        let shape = SkewShape::new(outer.clone(), inner.clone());
        // Contents and path abscissas live in a small window around the box.
        let content_lo = -(outer.len() as i64) - 1;
        let content_hi = outer.row(1) as i64 + 1;
        let c_idx = |c: i64| (c - content_lo) as usize;
        let skew_elems: Vec<LambdaElement> =
            seqs_ref.iter().map(|a| s_multi_skew(outer, inner, a)).collect();
        // a-values indexed by content for each sequence.
        let a_vals: Vec<Vec<Rat>> = seqs_ref
            .iter()
            .map(|a| (content_lo..=content_hi).map(|c| a.value_at(c)).collect())
            .collect();
        for n in 1..=n_max {
            // Plans hold (content index, symbol index) pairs so the route
            // sums below cost one multiplication per cell.
            let sym = |value: u32, primed: bool| (2 * (value - 1) + u32::from(!primed)) as u8;
            let strip_plans: Vec<tableaux::StripPlan> =
                tableaux::enumerate_diagonal_strict(&shape, n)
                    .iter()
                    .map(tableaux::strip_plan)
                    .collect();
            let primed_plans: Vec<Vec<(u8, u8)>> = enumerate_primed(&shape, n)
                .iter()
                .map(|t| {
                    tableaux::primed_plan(t)
                        .into_iter()
                        .map(|(c, v, pr)| (c_idx(c) as u8, sym(v, pr)))
                        .collect()
                })
                .collect();
            // Paths factor through per-row weights: a collection's weight is
            // the product of its row choices.
            let (row_paths, path_choices) = tableaux::enumerate_paths_indexed(&shape, n);
            let row_plans: Vec<Vec<Vec<(u8, u8)>>> = row_paths
                .iter()
                .map(|paths| {
                    paths
                        .iter()
                        .map(|p| {
                            tableaux::path_plan(p)
                                .into_iter()
                                .map(|(m, k, diag)| (c_idx(m) as u8, sym(k, diag)))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            for (si, a) in seqs_ref.iter().enumerate() {
                let av = &a_vals[si];
                for (px, py) in points_ref {
                    let x = &px[..n];
                    let y = &py[..n];
                    // factors[c][2(k-1)] = y_k + a_c, factors[c][2(k-1)+1]
                    // = x_k - a_c: the primed/unprimed cell weights.
                    let factors: Vec<Vec<Rat>> = av
                        .iter()
                        .map(|ac| {
                            (1..=n)
                                .flat_map(|k| [&y[k - 1] + ac, &x[k - 1] - ac])
                                .collect()
                        })
                        .collect();
                    let det = eval_lambda(
                        &skew_elems[si],
                        &crate::superpoly::EvalPoint::new(x.to_vec(), y.to_vec()),
                    );
                    let strips: Rat = strip_plans
                        .iter()
                        .map(|plan| {
                            let mut acc = Rat::one();
                            for (level, comps, u_cont, v_cont) in &plan.levels {
                                let (xv, yv) = (&x[*level as usize - 1], &y[*level as usize - 1]);
                                let uv = xv + yv;
                                for _ in 0..*comps {
                                    acc *= &uv;
                                }
                                for c in u_cont {
                                    acc *= xv - &av[c_idx(*c)];
                                }
                                for c in v_cont {
                                    acc *= yv + &av[c_idx(*c)];
                                }
                            }
                            acc
                        })
                        .sum();
                    // Unreduced numer/denom accumulation: one normalization
                    // per product instead of a gcd per cell.
                    let eval_plan = |plan: &Vec<(u8, u8)>| -> Rat {
                        let mut num = num::BigInt::from(1);
                        let mut den = num::BigInt::from(1);
                        for &(ci, s) in plan {
                            let f = &factors[ci as usize][s as usize];
                            num *= f.numer();
                            den *= f.denom();
                        }
                        Rat::new(num, den)
                    };
                    let primed: Rat = primed_plans.iter().map(eval_plan).sum();
                    let row_weights: Vec<Vec<Rat>> = row_plans
                        .iter()
                        .map(|paths| paths.iter().map(eval_plan).collect())
                        .collect();
                    let paths: Rat = path_choices
                        .iter()
                        .map(|choice| {
                            let mut acc = Rat::one();
                            for (row, &idx) in choice.iter().enumerate() {
                                acc *= &row_weights[row][idx];
                            }
                            acc
                        })
                        .sum();
                    let gv = gessel_viennot_determinant(&shape, a, x, y);
                    if strips != det || primed != det || paths != det || gv != det {
                        return Some(Failure {
                            inputs: format!("shape={shape} n={n} a={a}"),
                            expected: det.to_string(),
                            actual: format!(
                                "strips={strips} primed={primed} paths={paths} gv={gv}"
                            ),
                        });
                    }
                }
            }
        }
        None
    })
}

/// Criterion: the alternating-sum formula equals the specialized
/// Jacobi-Trudi determinant, with exact Vandermonde division throughout.
fn suite_sergeev_pragacz(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(8);
    let n_max = cfg.n.unwrap_or(4);
    let seqs = chosen_sequences(cfg, three_sequences());
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_size) {
        let d = mu.depth().max(1);
        for n in d..=n_max.max(d) {
            for (si, _) in seqs.iter().enumerate() {
                cases.push((mu.clone(), n, si));
            }
        }
    }
    let seqs_ref = &seqs;
    finish("sergeev-pragacz", started, cases, move |(mu, n, si)| {
        let a = &seqs_ref[*si];
        let sp = match superpoly::sergeev_pragacz(mu, a, *n) {
            Ok(sp) => sp,
            Err(e) => {
                return Some(Failure {
                    inputs: format!("mu={mu} n={n} a={a}"),
                    expected: "a polynomial".into(),
                    actual: format!("error: {e}"),
                })
            }
        };
        let jt = specialize(&s_multi(mu, a, Route::JacobiTrudi), *n);
        if sp != jt {
            return Some(Failure {
                inputs: format!("mu={mu} n={n} a={a}"),
                expected: format!("{jt:?}"),
                actual: format!("{sp:?}"),
            });
        }
        None
    })
}

/// Criterion: Jacobi-Trudi, Nagelsbach-Kostka and Giambelli agree.
fn suite_route_agreement(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(8);
    let mut default = three_sequences();
    default.push(seeded_table(cfg.seed()));
    let seqs = chosen_sequences(cfg, default);
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_size) {
        for (si, _) in seqs.iter().enumerate() {
            cases.push((mu.clone(), si));
        }
    }
    let seqs_ref = &seqs;
    finish("giambelli", started, cases, move |(mu, si)| {
        let a = &seqs_ref[*si];
        let jt = s_multi(mu, a, Route::JacobiTrudi);
        let nk = s_multi(mu, a, Route::NagelsbachKostka);
        let gi = s_multi(mu, a, Route::Giambelli);
        if nk != jt || gi != jt {
            return Some(Failure {
                inputs: format!("mu={mu} a={a}"),
                expected: fmt_lambda(&jt),
                actual: format!("nk={} giambelli={}", fmt_lambda(&nk), fmt_lambda(&gi)),
            });
        }
        None
    })
}

/// Criterion: omega(s_{mu;a}) = s_{mu';dual a}.
fn suite_duality(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(7);
    let seqs = chosen_sequences(cfg, three_sequences());
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_size) {
        for (si, _) in seqs.iter().enumerate() {
            cases.push((mu.clone(), si));
        }
    }
    let seqs_ref = &seqs;
    finish("duality", started, cases, move |(mu, si)| {
        let a = &seqs_ref[*si];
        let lhs = lambda::omega(&s_multi(mu, a, Route::JacobiTrudi));
        let rhs = s_multi(&mu.conjugate(), &a.dual(), Route::JacobiTrudi);
        if lhs != rhs {
            return Some(Failure {
                inputs: format!("mu={mu} a={a}"),
                expected: fmt_lambda(&rhs),
                actual: fmt_lambda(&lhs),
            });
        }
        None
    })
}

/// Criterion: vanishing off the containment order, nonzero at mu itself
/// with the value given by both closed forms (hook products for FS).
fn suite_vanishing(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(6);
    // Injective sequences only.
    let seqs = chosen_sequences(
        cfg,
        vec![ParameterSequence::fs(), affine_seq(), seeded_table(cfg.seed())],
    );
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_size) {
        for lambda in partitions_up_to(max_size) {
            for (si, _) in seqs.iter().enumerate() {
                cases.push((mu.clone(), lambda.clone(), si));
            }
        }
    }
    let seqs_ref = &seqs;
    finish("vanishing", started, cases, move |(mu, lambda, si)| {
        let a = &seqs_ref[*si];
        let fail = |expected: String, actual: String| {
            Some(Failure {
                inputs: format!("mu={mu} lambda={lambda} a={a}"),
                expected,
                actual,
            })
        };
        if !mu.is_subdiagram_of(lambda) {
            if !superpoly::vanishing_check(mu, lambda, a) {
                return fail("0".into(), "nonzero".into());
            }
            return None;
        }
        if mu == lambda {
            let n = mu.depth().max(1);
            let direct = eval_lambda(&s_multi(mu, a, Route::JacobiTrudi), &diagram_point(mu, a, n));
            let by_product = special_value_checked(mu, a, SpecialValueRoute::Product);
            let by_frobenius = special_value_checked(mu, a, SpecialValueRoute::FrobeniusProduct);
            if direct.is_zero() && !mu.is_empty() {
                return fail("nonzero".into(), "0".into());
            }
            if by_product != direct || by_frobenius != direct {
                return fail(
                    direct.to_string(),
                    format!("product={by_product} frobenius={by_frobenius}"),
                );
            }
            if *a == ParameterSequence::fs() {
                let hooks: Rat = mu
                    .hook_lengths()
                    .values()
                    .map(|&h| rat::rint(h as i64))
                    .product();
                if direct != hooks {
                    return fail(hooks.to_string(), direct.to_string());
                }
            }
        }
        None
    })
}

fn special_value_checked(mu: &Partition, a: &ParameterSequence, route: SpecialValueRoute) -> Rat {
    superpoly::special_value(mu, a, route).expect("injective sequences cannot collide")
}

/// Criterion: transition rows reconstruct s_{mu;a} from the target basis,
/// and the pinned FS rows come out exactly.
fn suite_transition(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(7);
    let pairs = vec![
        (ParameterSequence::fs(), ParameterSequence::zero()),
        (ParameterSequence::zero(), ParameterSequence::fs()),
        (affine_seq(), seeded_table(cfg.seed())),
    ];
    let mut cases: Vec<(Partition, usize)> = Vec::new();
    for mu in partitions_up_to(max_size) {
        for (pi, _) in pairs.iter().enumerate() {
            cases.push((mu.clone(), pi));
        }
    }
    let pairs_ref = &pairs;
    let mut report = finish("transition", started, cases, move |(mu, pi)| {
        let (a, b) = &pairs_ref[*pi];
        let row = transition_row(mu, a, b);
        let mut acc = LambdaElement::zero();
        for (nu, c) in &row {
            acc = acc.add(&s_multi(nu, b, Route::JacobiTrudi).scale(c));
        }
        let target = s_multi(mu, a, Route::JacobiTrudi);
        if acc != target {
            return Some(Failure {
                inputs: format!("mu={mu} a={a} b={b}"),
                expected: fmt_lambda(&target),
                actual: fmt_lambda(&acc),
            });
        }
        None
    });

    // Pinned rows: Fs_(2) and Fs_(2,1) in the classical basis.
    let fs = ParameterSequence::fs();
    let zero = ParameterSequence::zero();
    let row2 = transition_row(&Partition::new(vec![2]), &fs, &zero);
    let expected2 = vec![
        (Partition::new(vec![2]), rat::rint(1)),
        (Partition::new(vec![1]), rat::rq(-1, 2)),
    ];
    let row21 = transition_row(&Partition::new(vec![2, 1]), &fs, &zero);
    let expected21 = vec![
        (Partition::new(vec![2, 1]), rat::rint(1)),
        (Partition::new(vec![2]), rat::rq(-1, 2)),
        (Partition::new(vec![1, 1]), rat::rq(-1, 2)),
        (Partition::new(vec![1]), rat::rq(1, 4)),
    ];
    for (row, expected, name) in [(row2, expected2, "2"), (row21, expected21, "2,1")] {
        report.cases_run += 1;
        let ok = row.len() == expected.len()
            && expected.iter().all(|(nu, c)| row.get(nu) == Some(c));
        if !ok {
            report.failures.push(Failure {
                inputs: format!("pinned row mu={name} (fs -> zero)"),
                expected: format!("{expected:?}"),
                actual: format!("{row:?}"),
            });
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    report
}

/// Criterion: the hook product identity holds for p, q <= 4.
fn suite_hook_identity(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max = cfg.max_size.unwrap_or(4);
    let seqs = chosen_sequences(cfg, three_sequences());
    let mut cases = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            for (si, _) in seqs.iter().enumerate() {
                cases.push((p, q, si));
            }
        }
    }
    let seqs_ref = &seqs;
    finish("hook-identity", started, cases, move |(p, q, si)| {
        let a = &seqs_ref[*si];
        if hook_identity_check(*p, *q, a) {
            None
        } else {
            Some(Failure {
                inputs: format!("p={p} q={q} a={a}"),
                expected: "identity".into(),
                actual: "mismatch".into(),
            })
        }
    })
}

/// Criterion: the generating-series identities.
fn suite_series(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut cases_run = 0usize;
    let mut record = |name: &str, ok: bool| {
        cases_run += 1;
        if !ok {
            failures.push(Failure {
                inputs: name.to_string(),
                expected: "identity".into(),
                actual: "mismatch".into(),
            });
        }
    };

    // H(u) E(-u) = 1 to order 10.
    let order = 10usize;
    let h = lambda::h_series(order);
    let e_neg = lambda::e_series(order).negate_variable();
    record("H(u)E(-u)=1@10", h.mul(&e_neg).is_one());

    // The FS one-row and one-column series reconstruct H and E: summing
    // Fh_k (resp. Fe_k) against the falling denominators returns the
    // classical generators, k <= 8.
    let fs = ParameterSequence::fs();
    let k_max = 8usize;
    let dens = multischur::denominator_expansions(k_max, k_max, &fs);
    let fh: Vec<LambdaElement> = (0..=k_max)
        .map(|k| fs_function(&Partition::new(vec![k as u32])))
        .collect();
    let fe: Vec<LambdaElement> = (0..=k_max)
        .map(|k| fs_function(&Partition::new(vec![1; k])))
        .collect();
    let mut h_ok = true;
    let mut e_ok = true;
    for m in 0..=k_max {
        let mut acc_h = LambdaElement::zero();
        let mut acc_e = LambdaElement::zero();
        for k in 0..=m {
            let d = dens[k].coeff(m);
            if !d.is_zero() {
                acc_h = acc_h.add(&fh[k].scale(d));
                acc_e = acc_e.add(&fe[k].scale(d));
            }
        }
        h_ok &= acc_h == LambdaElement::h(m as u32);
        e_ok &= acc_e == lambda::e_gen(m as u32);
    }
    record("fs-h-series@8", h_ok);
    record("fs-e-series@8", e_ok);

    // The two-variable hook series reconstructs Fs_(p|q) for p, q <= 3 by a
    // triangular solve against H(u) E(v).
    record("fs-hook-series@3", hook_series_reconstructs(3));

    // H*(u) E*(-u-1) = 1 to order 8 at two evaluation points.
    record(
        "shifted-series@8-pt1",
        shifted::shifted_series_check(8, &[rat::rint(2), rat::rint(1)]),
    );
    record(
        "shifted-series@8-pt2",
        shifted::shifted_series_check(8, &[rat::rint(4), rat::rint(2), rat::rint(1)]),
    );

    let _ = cfg;
    VerificationReport {
        suite: "series".into(),
        cases_run,
        failures,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Solves the double series 1 + (u+v) sum Fs_(p|q) W_pq = H(u)E(v) for the
/// hook functions, levels p+q ascending, and compares them with the
/// determinantal hooks up to p, q <= p_max.
fn hook_series_reconstructs(p_max: usize) -> bool {
    let fs = ParameterSequence::fs();
    let levels = 2 * p_max;
    let order = levels + 2;
    let dens = multischur::denominator_expansions(order, order, &fs);
    // W[p][q][m][l].
    let shift_down = |s: &Series<Rat>| -> Vec<Rat> {
        (0..=s.order())
            .map(|m| if m < s.order() { s.coeff(m + 1).clone() } else { Rat::zero() })
            .collect()
    };
    let w_at = |p: usize, q: usize, m: usize, l: usize| -> Rat {
        let du = &dens[p + 1];
        let dv = &dens[q + 1];
        let du_shift = shift_down(du);
        let dv_shift = shift_down(dv);
        &du_shift[m] * dv.coeff(l) + du.coeff(m) * &dv_shift[l]
    };
    // Target: H(u)E(v) - 1 coefficients.
    let h = lambda::h_series(order);
    let e = lambda::e_series(order);
    let target = |m: usize, l: usize| -> LambdaElement {
        let t = h.coeff(m).mul(e.coeff(l));
        if m == 0 && l == 0 {
            t.sub(&LambdaElement::one())
        } else {
            t
        }
    };
    let mut solved: Vec<Vec<Option<LambdaElement>>> = vec![vec![None; levels + 1]; levels + 1];
    for level in 0..=levels {
        for p in 0..=level {
            let q = level - p;
            // Extract at coefficient (m, l) = (p, q+1).
            let mut acc = target(p, q + 1);
            for (pp, row) in solved.iter().enumerate() {
                for (qq, val) in row.iter().enumerate() {
                    let Some(val) = val else { continue };
                    let wcoeff = w_at(pp, qq, p, q + 1);
                    if !wcoeff.is_zero() {
                        acc = acc.sub(&val.scale(&wcoeff));
                    }
                }
            }
            // The diagonal weight is 1.
            solved[p][q] = Some(acc);
        }
    }
    for p in 0..=p_max {
        for q in 0..=p_max {
            let expected = fs_function(&hook_partition(p as u32, q as u32));
            if solved[p][q].as_ref() != Some(&expected) {
                return false;
            }
        }
    }
    true
}

/// Criterion: the interpolation solve returns exactly s_{mu;a}.
fn suite_interpolation(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_size = cfg.max_size.unwrap_or(5);
    let seqs = chosen_sequences(cfg, vec![ParameterSequence::fs(), affine_seq()]);
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_size) {
        for (si, _) in seqs.iter().enumerate() {
            cases.push((mu.clone(), si));
        }
    }
    let seqs_ref = &seqs;
    finish("interpolation", started, cases, move |(mu, si)| {
        let a = &seqs_ref[*si];
        match superpoly::interpolation_solve(mu, a) {
            Ok(f) => {
                let expected = s_multi(mu, a, Route::JacobiTrudi);
                if f != expected {
                    return Some(Failure {
                        inputs: format!("mu={mu} a={a}"),
                        expected: fmt_lambda(&expected),
                        actual: fmt_lambda(&f),
                    });
                }
                None
            }
            Err(e) => Some(Failure {
                inputs: format!("mu={mu} a={a}"),
                expected: "unique solution".into(),
                actual: format!("error: {e}"),
            }),
        }
    })
}

/// Criterion: the path/tableau correspondence is a weight-preserving
/// bijection for skew shapes of size <= 6 inside the 4x4 box, n <= 3.
fn suite_paths_bijection(cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let max_cells = cfg.max_size.unwrap_or(6);
    let n_max = cfg.n.unwrap_or(3);
    let seqs = chosen_sequences(
        cfg,
        vec![ParameterSequence::fs(), seeded_table(cfg.seed())],
    );
    let (px, py) = seeded_point(cfg.seed().wrapping_add(7), n_max);
    let mut cases = Vec::new();
    for outer in partitions_in_box(4, 4) {
        for inner in subdiagrams(&outer) {
            if outer.size() - inner.size() > max_cells {
                continue;
            }
            for n in 1..=n_max {
                for (si, _) in seqs.iter().enumerate() {
                    cases.push((outer.clone(), inner.clone(), n, si));
                }
            }
        }
    }
    let seqs_ref = &seqs;
    let px_ref = &px;
    let py_ref = &py;
    finish("paths-bijection", started, cases, move |(outer, inner, n, si)| {
        let a = &seqs_ref[*si];
        let shape = SkewShape::new(outer.clone(), inner.clone());
        let x = &px_ref[..*n];
        let y = &py_ref[..*n];
        let collections = enumerate_paths(&shape, *n);
        let mut tableaux = enumerate_primed(&shape, *n);
        let fail = |expected: String, actual: String| {
            Some(Failure {
                inputs: format!("shape={shape} n={n} a={a}"),
                expected,
                actual,
            })
        };
        if collections.len() != tableaux.len() {
            return fail(
                format!("{} tableaux", tableaux.len()),
                format!("{} path collections", collections.len()),
            );
        }
        let mut images = Vec::with_capacity(collections.len());
        for l in &collections {
            let t = collection_to_tableau(l);
            if !crate::tableaux::is_valid_primed(&shape, t.entries()) {
                return fail("a valid tableau".into(), format!("{t:?}"));
            }
            if &tableau_to_collection(&t, &shape, *n) != l {
                return fail("round trip".into(), format!("{l:?}"));
            }
            if collection_weight(l, a, x, y) != t.weight(a, x, y) {
                return fail("matching weights".into(), format!("{l:?}"));
            }
            images.push(t);
        }
        images.sort();
        images.dedup();
        tableaux.sort();
        if images != tableaux {
            return fail("a bijection".into(), "image set differs".into());
        }
        None
    })
}
