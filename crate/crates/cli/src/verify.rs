//! Verification suites for the `verify` subcommand.
//!
//! Each check re-derives one structural claim from scratch — building
//! graphs, enumerating strings or cubes, expanding series — and prints a
//! single `ok`/`FAIL` line, with a witness on failure. Suites run over a
//! parameter box (`--n-max`/`--k-max`) or a single family instance
//! (`--family` with `-n`/`-k`). The runner also records which library
//! operations the checks exercised and prints a coverage summary; the
//! `all` suite at the default box touches every operation.

use std::collections::BTreeMap;
use std::process::ExitCode;

use munarini::embedding::{self, EmbeddedGraph, TripleScan};
use munarini::graphs::{self, Family};
use munarini::poly::{self, BiPoly, IntPoly};
use munarini::strings;
use munarini::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{check_cap, resolve_family, CliError, SuiteKind, VerifyArgs};

/// Every public library operation; the coverage summary reports which of
/// these the selected suite exercised.
pub const LIBRARY_OPS: [&str; 36] = [
    "strings.enumerate_pell_strings",
    "strings.is_pell_string",
    "strings.encode_psi",
    "strings.decode_psi",
    "strings.weight",
    "strings.enumerate_maximal_strings",
    "strings.count_ank_words",
    "graphs.build_munarini",
    "graphs.build_generalized_pell",
    "graphs.build_fibonacci_cube",
    "graphs.build_pell",
    "graphs.build_hypercube",
    "graphs.build_star",
    "graphs.decompose_munarini",
    "graphs.iso_to_fibonacci",
    "graphs.iso_to_pell",
    "graphs.bfs_distances",
    "graphs.degree",
    "graphs.count_edges_closed_form",
    "embedding.isometry_violation",
    "embedding.check_daisy",
    "embedding.median_violation",
    "embedding.median",
    "embedding.enumerate_cubes",
    "embedding.enumerate_maximal_cubes",
    "embedding.distance_cube_census",
    "poly.expand_series",
    "poly.weight_poly",
    "poly.cube_poly",
    "poly.distance_cube_poly",
    "poly.maximal_cube_poly",
    "poly.cube_number",
    "poly.cube_number_series",
    "poly.total_weight",
    "poly.fib_k",
    "poly.max_degree_witness",
];

/// First terms of the k=1 cube-number sequence (Jacobsthal numbers,
/// offset so that term n counts the cubes of the order-n graph).
const QNUM_K1: [u64; 10] = [1, 1, 3, 5, 11, 21, 43, 85, 171, 341];
/// First terms of the k=2 cube-number sequence.
const QNUM_K2: [u64; 9] = [1, 3, 11, 39, 139, 495, 1763, 6279, 22363];

/// The parameter instances each suite iterates over, per family.
struct ParamBox {
    munarini: Vec<(usize, u8)>,
    genpell: Vec<(usize, u8)>,
    fibonacci: Vec<usize>,
    pell: Vec<usize>,
    hypercube: Vec<usize>,
    star: Vec<u8>,
    /// (k, series order) pairs for the cube-number series checks.
    series: Vec<(u8, usize)>,
}

impl ParamBox {
    fn full(n_max: usize, k_max: u8) -> Self {
        ParamBox {
            munarini: (0..=n_max)
                .flat_map(|n| (1..=k_max).map(move |k| (n, k)))
                .collect(),
            genpell: (0..=n_max)
                .flat_map(|n| (2..=k_max).map(move |k| (n, k)))
                .collect(),
            fibonacci: (0..=n_max).collect(),
            pell: if k_max >= 2 { (0..=n_max).collect() } else { Vec::new() },
            hypercube: (0..=n_max).collect(),
            star: (1..=k_max).collect(),
            series: (1..=k_max).map(|k| (k, n_max.max(9))).collect(),
        }
    }

    fn single(family: Family, n: usize, k: u8) -> Self {
        let mut boxed = ParamBox {
            munarini: Vec::new(),
            genpell: Vec::new(),
            fibonacci: Vec::new(),
            pell: Vec::new(),
            hypercube: Vec::new(),
            star: Vec::new(),
            series: Vec::new(),
        };
        match family {
            Family::Munarini => {
                boxed.munarini = vec![(n, k)];
                boxed.series = vec![(k, n.max(9))];
            }
            Family::GeneralizedPell => {
                boxed.genpell = vec![(n, k)];
                boxed.series = vec![(k, n.max(9))];
            }
            Family::FibonacciCube => boxed.fibonacci = vec![n],
            Family::PellGraph => boxed.pell = vec![n],
            Family::Hypercube => boxed.hypercube = vec![n],
            Family::Star => boxed.star = vec![k],
        }
        boxed
    }
}

/// Prints check lines, counts failures, and records operation coverage.
struct Runner {
    checks: usize,
    failures: usize,
    coverage: std::collections::BTreeSet<&'static str>,
    /// List unexercised operations at the end; on for box mode, where the
    /// suites are expected to reach everything, off for single instances.
    report_missing: bool,
}

impl Runner {
    fn new(report_missing: bool) -> Self {
        Runner {
            checks: 0,
            failures: 0,
            coverage: std::collections::BTreeSet::new(),
            report_missing,
        }
    }

    fn tick(&mut self, op: &'static str) {
        debug_assert!(LIBRARY_OPS.contains(&op), "unknown operation {op}");
        self.coverage.insert(op);
    }

    fn check(&mut self, name: &str, outcome: Result<(), String>) {
        self.check_with(name, outcome.map(|()| String::new()));
    }

    /// Like [`Runner::check`], but a passing check may carry a detail
    /// string (printed after the name) documenting what was observed.
    fn check_with(&mut self, name: &str, outcome: Result<String, String>) {
        self.checks += 1;
        match outcome {
            Ok(detail) if detail.is_empty() => println!("ok   {name}"),
            Ok(detail) => println!("ok   {name}: {detail}"),
            Err(witness) => {
                self.failures += 1;
                println!("FAIL {name}: {witness}");
            }
        }
    }

    fn finish(self) -> ExitCode {
        let missing: Vec<&str> = LIBRARY_OPS
            .iter()
            .copied()
            .filter(|op| !self.coverage.contains(op))
            .collect();
        println!(
            "coverage: {}/{} library operations exercised",
            LIBRARY_OPS.len() - missing.len(),
            LIBRARY_OPS.len()
        );
        if self.report_missing && !missing.is_empty() {
            println!("not exercised: {}", missing.join(", "));
        }
        if self.failures == 0 {
            println!("PASS: {} checks", self.checks);
            ExitCode::SUCCESS
        } else {
            println!("FAIL: {} of {} checks failed", self.failures, self.checks);
            ExitCode::from(1)
        }
    }
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let box_mode = args.family.is_none();
    let boxed = match &args.family {
        Some(name) => {
            let (family, n, k) = resolve_family(name, args.n, args.k)?;
            check_cap(family, n, k)?;
            ParamBox::single(family, n, k)
        }
        None => {
            if args.n.is_some() || args.k.is_some() {
                return Err(CliError::Usage(
                    "-n/-k select a single instance and require --family; \
                     use --n-max/--k-max for suite bounds"
                        .into(),
                ));
            }
            if args.k_max < 1 {
                return Err(CliError::Usage("--k-max must be at least 1".into()));
            }
            check_cap(Family::Munarini, args.n_max, args.k_max)?;
            check_cap(Family::FibonacciCube, args.n_max, 1)?;
            check_cap(Family::Hypercube, args.n_max, 1)?;
            ParamBox::full(args.n_max, args.k_max)
        }
    };

    let mut runner = Runner::new(box_mode && args.suite == SuiteKind::All);
    let suites: &[SuiteKind] = match args.suite {
        SuiteKind::All => &[
            SuiteKind::Isometry,
            SuiteKind::Daisy,
            SuiteKind::Median,
            SuiteKind::Identities,
            SuiteKind::Oracle,
        ],
        other => return_single(other),
    };
    for suite in suites {
        match suite {
            SuiteKind::Isometry => suite_isometry(&mut runner, &boxed),
            SuiteKind::Daisy => suite_daisy(&mut runner, &boxed),
            SuiteKind::Median => suite_median(&mut runner, &boxed),
            SuiteKind::Identities => suite_identities(&mut runner, &boxed),
            SuiteKind::Oracle => suite_oracle(&mut runner, &boxed),
            SuiteKind::All => unreachable!("expanded above"),
        }
    }
    Ok(runner.finish())
}

fn return_single(kind: SuiteKind) -> &'static [SuiteKind] {
    match kind {
        SuiteKind::Isometry => &[SuiteKind::Isometry],
        SuiteKind::Daisy => &[SuiteKind::Daisy],
        SuiteKind::Median => &[SuiteKind::Median],
        SuiteKind::Identities => &[SuiteKind::Identities],
        SuiteKind::Oracle => &[SuiteKind::Oracle],
        SuiteKind::All => unreachable!("caller expands 'all'"),
    }
}

fn err_string(err: Error) -> String {
    err.to_string()
}

// ---------------------------------------------------------------- builders

fn munarini_embedded(n: usize, k: u8) -> Result<EmbeddedGraph, Error> {
    embedding::munarini_psi(n, k)
}

fn genpell_embedded(n: usize, k: u8) -> Result<EmbeddedGraph, Error> {
    embedding::theta_labeling(graphs::build_generalized_pell(n, k)?, 0)
}

fn fibonacci_embedded(n: usize) -> Result<EmbeddedGraph, Error> {
    embedding::identity_labeling(graphs::build_fibonacci_cube(n)?)
}

fn pell_embedded(n: usize) -> Result<EmbeddedGraph, Error> {
    embedding::theta_labeling(graphs::build_pell(n)?, 0)
}

fn hypercube_embedded(n: usize) -> Result<EmbeddedGraph, Error> {
    embedding::identity_labeling(graphs::build_hypercube(n)?)
}

fn star_embedded(k: u8) -> Result<EmbeddedGraph, Error> {
    embedding::psi_labeling(graphs::build_star(k)?)
}

fn isometric_or_witness(emb: &EmbeddedGraph) -> Result<(), String> {
    match emb.isometry_violation() {
        None => Ok(()),
        Some(v) => Err(format!(
            "d({}, {}) = {} in the graph but Hamming distance {}",
            v.u, v.v, v.graph_distance, v.hamming_distance
        )),
    }
}

// ---------------------------------------------------------------- isometry

fn suite_isometry(r: &mut Runner, b: &ParamBox) {
    for &(n, k) in &b.munarini {
        r.tick("graphs.build_munarini");
        r.tick("strings.encode_psi");
        r.tick("embedding.isometry_violation");
        r.check(
            &format!("isometry munarini n={n} k={k}"),
            munarini_embedded(n, k)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );

        r.tick("graphs.bfs_distances");
        r.tick("strings.weight");
        r.check(
            &format!("weight-distance munarini n={n} k={k}"),
            (|| {
                let emb = munarini_embedded(n, k).map_err(err_string)?;
                let zero = emb
                    .zero_vertex()
                    .ok_or_else(|| "no all-zero label".to_string())?;
                let dist = emb.graph().bfs_distances(zero);
                for i in 0..emb.vertex_count() {
                    let string = emb.graph().label(i).as_pell().ok_or("not a string label")?;
                    if dist[i] != emb.label(i).weight() || dist[i] != string.weight() {
                        return Err(format!(
                            "vertex {i} ({string}): distance {} from the zero vertex, \
                             label weight {}, string weight {}",
                            dist[i],
                            emb.label(i).weight(),
                            string.weight()
                        ));
                    }
                }
                Ok(())
            })(),
        );
    }

    for &(n, k) in &b.genpell {
        r.tick("graphs.build_generalized_pell");
        r.check(
            &format!("isometry genpell n={n} k={k}"),
            genpell_embedded(n, k)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );
    }

    for &n in &b.fibonacci {
        r.tick("graphs.build_fibonacci_cube");
        r.check(
            &format!("isometry fibonacci n={n}"),
            fibonacci_embedded(n)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );
    }

    for &n in &b.pell {
        r.tick("graphs.build_pell");
        r.check(
            &format!("isometry pell n={n}"),
            pell_embedded(n)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );
    }

    for &n in &b.hypercube {
        r.tick("graphs.build_hypercube");
        r.check(
            &format!("isometry hypercube n={n}"),
            hypercube_embedded(n)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );
    }

    for &k in &b.star {
        r.tick("graphs.build_star");
        r.check(
            &format!("isometry star k={k}"),
            star_embedded(k)
                .map_err(err_string)
                .and_then(|emb| isometric_or_witness(&emb)),
        );
    }
}

// ------------------------------------------------------------------- daisy

fn daisy_or_witness(emb: &EmbeddedGraph) -> Result<(), String> {
    let report = emb.check_daisy().map_err(err_string)?;
    if report.is_daisy {
        Ok(())
    } else {
        let witness = report.witness.expect("non-daisy report carries a witness");
        Err(format!(
            "label {} with bit {} cleared is not a vertex",
            witness.label, witness.cleared_bit
        ))
    }
}

fn suite_daisy(r: &mut Runner, b: &ParamBox) {
    for &(n, k) in &b.munarini {
        r.tick("embedding.check_daisy");
        r.check(
            &format!("daisy munarini n={n} k={k}"),
            munarini_embedded(n, k)
                .map_err(err_string)
                .and_then(|emb| daisy_or_witness(&emb)),
        );

        // The maximal vertices are the encodings of the zero-free strings;
        // the characterization requires arity at least 2.
        if k >= 2 {
            r.tick("strings.enumerate_maximal_strings");
            r.tick("strings.encode_psi");
            r.check(
                &format!("maximal-vertices munarini n={n} k={k}"),
                (|| {
                    let emb = munarini_embedded(n, k).map_err(err_string)?;
                    let report = emb.check_daisy().map_err(err_string)?;
                    let mut expected: Vec<_> = strings::enumerate_maximal_strings(n, k)
                        .map_err(err_string)?
                        .iter()
                        .map(|s| strings::encode_psi(s).into_label())
                        .collect();
                    expected.sort();
                    if report.maximal_labels == expected {
                        Ok(())
                    } else {
                        Err(format!(
                            "{} maximal labels, {} zero-free string encodings",
                            report.maximal_labels.len(),
                            expected.len()
                        ))
                    }
                })(),
            );
        }
    }

    // The generalized Pell graphs are daisy cubes exactly when no degree
    // conflict exists: the common weight polynomial forces the zero vertex
    // of any daisy embedding to have degree kn-1, while the measured
    // maximum degree is min(2n, kn-1).
    for &(n, k) in &b.genpell {
        if n == 0 {
            continue;
        }
        r.tick("poly.max_degree_witness");
        r.check_with(
            &format!("degree-witness genpell n={n} k={k}"),
            (|| {
                let witness = poly::max_degree_witness(n, k).map_err(err_string)?;
                let expected_coeff = BigInt::from(k as i64 * n as i64 - 1);
                if witness.weight_linear_coeff != expected_coeff {
                    return Err(format!(
                        "weight polynomial linear coefficient {} but kn-1 = {expected_coeff}",
                        witness.weight_linear_coeff
                    ));
                }
                if BigInt::from(witness.zero_vertex_degree) != expected_coeff {
                    return Err(format!(
                        "zero vertex degree {} but kn-1 = {expected_coeff}",
                        witness.zero_vertex_degree
                    ));
                }
                let measured = witness
                    .genpell_max_degree
                    .ok_or_else(|| "missing measured maximum degree".to_string())?;
                let expected_max = (2 * n).min(k as usize * n - 1);
                if measured != expected_max {
                    return Err(format!(
                        "measured maximum degree {measured}, expected {expected_max}"
                    ));
                }
                let conflict = measured != witness.zero_vertex_degree;
                let expected_conflict = (k >= 3 && n >= 2) || (k >= 4 && n == 1);
                if conflict != expected_conflict {
                    return Err(format!(
                        "degree conflict {conflict} (max degree {measured} vs kn-1 \
                         {expected_coeff}), expected {expected_conflict}"
                    ));
                }
                if conflict {
                    Ok(format!(
                        "not a daisy cube: maximum degree {measured} but a proper \
                         embedding would force {expected_coeff}"
                    ))
                } else {
                    Ok(format!(
                        "daisy-compatible: maximum degree {measured} = kn-1"
                    ))
                }
            })(),
        );
    }

    for &n in &b.fibonacci {
        r.check(
            &format!("daisy fibonacci n={n}"),
            fibonacci_embedded(n)
                .map_err(err_string)
                .and_then(|emb| daisy_or_witness(&emb)),
        );
    }

    for &n in &b.hypercube {
        r.check(
            &format!("daisy hypercube n={n}"),
            hypercube_embedded(n)
                .map_err(err_string)
                .and_then(|emb| daisy_or_witness(&emb)),
        );
    }

    for &k in &b.star {
        r.check(
            &format!("daisy star k={k}"),
            star_embedded(k)
                .map_err(err_string)
                .and_then(|emb| daisy_or_witness(&emb)),
        );
    }
}

// ------------------------------------------------------------------ median

fn median_closed_or_witness(emb: &EmbeddedGraph) -> Result<(), String> {
    if let Some(v) = emb.isometry_violation() {
        return Err(format!(
            "not isometric: d({}, {}) = {} vs Hamming {}",
            v.u, v.v, v.graph_distance, v.hamming_distance
        ));
    }
    match emb.median_violation(TripleScan::default()) {
        None => Ok(()),
        Some(v) => Err(format!(
            "triple ({}, {}, {}) has majority label {} which is not a vertex",
            v.triple.0, v.triple.1, v.triple.2, v.majority
        )),
    }
}

fn suite_median(r: &mut Runner, b: &ParamBox) {
    for &(n, k) in &b.munarini {
        r.tick("embedding.median_violation");
        r.check(
            &format!("median munarini n={n} k={k}"),
            munarini_embedded(n, k)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );

        // Spot-check one explicit median: it must lie on shortest paths
        // between all three pairs.
        r.tick("embedding.median");
        r.check(
            &format!("median-vertex munarini n={n} k={k}"),
            (|| {
                let emb = munarini_embedded(n, k).map_err(err_string)?;
                let count = emb.vertex_count();
                let (u, v, w) = (0, count / 2, count - 1);
                if u == v || v == w {
                    return Ok(());
                }
                let m = emb.median(u, v, w).map_err(err_string)?;
                let from_u = emb.graph().bfs_distances(u);
                let from_v = emb.graph().bfs_distances(v);
                let from_w = emb.graph().bfs_distances(w);
                let on_geodesics = from_u[m] + from_v[m] == from_u[v]
                    && from_u[m] + from_w[m] == from_u[w]
                    && from_v[m] + from_w[m] == from_v[w];
                if on_geodesics {
                    Ok(())
                } else {
                    Err(format!(
                        "median {m} of ({u}, {v}, {w}) is off the geodesics"
                    ))
                }
            })(),
        );
    }

    for &(n, k) in &b.genpell {
        r.check(
            &format!("median genpell n={n} k={k}"),
            genpell_embedded(n, k)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );
    }

    for &n in &b.fibonacci {
        r.check(
            &format!("median fibonacci n={n}"),
            fibonacci_embedded(n)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );
    }

    for &n in &b.pell {
        r.check(
            &format!("median pell n={n}"),
            pell_embedded(n)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );
    }

    for &n in &b.hypercube {
        r.check(
            &format!("median hypercube n={n}"),
            hypercube_embedded(n)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );
    }

    for &k in &b.star {
        r.check(
            &format!("median star k={k}"),
            star_embedded(k)
                .map_err(err_string)
                .and_then(|emb| median_closed_or_witness(&emb)),
        );
    }
}

// -------------------------------------------------------------- identities

fn same_poly(name: &str, a: &IntPoly, b: &IntPoly) -> Result<(), String> {
    match poly::first_coeff_mismatch(a, b) {
        None => Ok(()),
        Some((exp, left, right)) => Err(format!(
            "{name}: coefficient of x^{exp} is {left} vs {right}"
        )),
    }
}

fn same_bipoly(name: &str, a: &BiPoly, b: &BiPoly) -> Result<(), String> {
    if a.terms().eq(b.terms()) {
        Ok(())
    } else {
        Err(format!("{name}: {a} vs {b}"))
    }
}

fn suite_identities(r: &mut Runner, b: &ParamBox) {
    for &(n, k) in &b.munarini {
        r.tick("strings.enumerate_pell_strings");
        r.tick("strings.is_pell_string");
        r.tick("poly.fib_k");
        r.tick("poly.expand_series");
        r.check(
            &format!("order munarini n={n} k={k}"),
            (|| {
                let strings = strings::enumerate_pell_strings(n, k).map_err(err_string)?;
                for s in &strings {
                    if !strings::is_pell_string(s.symbols(), k).map_err(err_string)? {
                        return Err(format!("enumerated string {s} fails validation"));
                    }
                }
                let expected = poly::fib_k(n + 1, k);
                if BigInt::from(strings.len()) != expected {
                    return Err(format!(
                        "{} strings enumerated, F({}) = {expected}",
                        strings.len(),
                        n + 1
                    ));
                }
                let series = poly::order_series(k).expand(n);
                if series[n] != IntPoly::constant(expected.clone()) {
                    return Err(format!(
                        "order series coefficient {} vs F({}) = {expected}",
                        series[n],
                        n + 1
                    ));
                }
                let graph = graphs::build_munarini(n, k).map_err(err_string)?;
                if BigInt::from(graph.vertex_count()) != expected {
                    return Err(format!(
                        "graph has {} vertices, F({}) = {expected}",
                        graph.vertex_count(),
                        n + 1
                    ));
                }
                Ok(())
            })(),
        );

        r.tick("graphs.count_edges_closed_form");
        r.tick("poly.total_weight");
        r.check(
            &format!("size munarini n={n} k={k}"),
            (|| {
                let graph = graphs::build_munarini(n, k).map_err(err_string)?;
                let brute = BigInt::from(graph.edge_count());
                let closed = graphs::count_edges_closed_form(n, k).map_err(err_string)?;
                if brute != closed {
                    return Err(format!("built graph has {brute} edges, closed form {closed}"));
                }
                let series = poly::edge_series(k).expand(n);
                if series[n] != IntPoly::constant(brute.clone()) {
                    return Err(format!("edge series gives {}, graph has {brute}", series[n]));
                }
                let weighted = poly::total_weight(n, k);
                if weighted != brute {
                    return Err(format!("total weight {weighted}, graph has {brute} edges"));
                }
                if k >= 2 {
                    let pell = graphs::build_generalized_pell(n, k).map_err(err_string)?;
                    if pell.edge_count() != graph.edge_count() {
                        return Err(format!(
                            "generalized Pell graph has {} edges, {brute} expected",
                            pell.edge_count()
                        ));
                    }
                }
                Ok(())
            })(),
        );

        if k == 2 {
            r.check(
                &format!("pell-size-reduction n={n}"),
                (|| {
                    let edges = graphs::count_edges_closed_form(n, 2).map_err(err_string)?;
                    let pell_number = poly::fib_k(n + 1, 2);
                    if BigInt::from(2) * edges.clone() == BigInt::from(n) * pell_number.clone() {
                        Ok(())
                    } else {
                        Err(format!("2 * {edges} != {n} * {pell_number}"))
                    }
                })(),
            );
        }

        if n >= 1 {
            r.tick("graphs.degree");
            r.check(
                &format!("zero-degree munarini n={n} k={k}"),
                (|| {
                    let graph = graphs::build_munarini(n, k).map_err(err_string)?;
                    let zero = strings::PellString::zeros(n, k);
                    let index = graph
                        .vertex_index_of_pell(&zero)
                        .ok_or_else(|| "zero string is not a vertex".to_string())?;
                    let degree = graph.degree(index);
                    let expected = k as usize * n - 1;
                    if degree == expected {
                        Ok(())
                    } else {
                        Err(format!("degree of 0^{n} is {degree}, expected kn-1 = {expected}"))
                    }
                })(),
            );
        }

        if n >= 2 {
            r.tick("graphs.decompose_munarini");
            r.check(
                &format!("decompose munarini n={n} k={k}"),
                (|| {
                    let graph = graphs::build_munarini(n, k).map_err(err_string)?;
                    let parts = graphs::decompose_munarini(&graph).map_err(err_string)?;
                    let sub = poly::fib_k(n, k);
                    let subsub = poly::fib_k(n - 1, k);
                    if parts.prefix_parts.len() != k as usize {
                        return Err(format!("{} prefix groups, expected {k}", parts.prefix_parts.len()));
                    }
                    for (c, part) in parts.prefix_parts.iter().enumerate() {
                        if BigInt::from(part.len()) != sub {
                            return Err(format!(
                                "group {c} has {} vertices, F({n}) = {sub}",
                                part.len()
                            ));
                        }
                    }
                    if BigInt::from(parts.kk_part.len()) != subsub {
                        return Err(format!(
                            "kk group has {} vertices, F({}) = {subsub}",
                            parts.kk_part.len(),
                            n - 1
                        ));
                    }
                    if BigInt::from(parts.matching.len()) != subsub {
                        return Err(format!(
                            "matching has {} edges, F({}) = {subsub}",
                            parts.matching.len(),
                            n - 1
                        ));
                    }
                    // Edge reassembly: k copies of the order n-1 graph, one
                    // of order n-2, k-1 prefix cross families of F(n) edges
                    // each, plus the matching.
                    let sub_edges = graphs::count_edges_closed_form(n - 1, k).map_err(err_string)?;
                    let subsub_edges =
                        graphs::count_edges_closed_form(n - 2, k).map_err(err_string)?;
                    let cross: usize = parts.cross_edges.values().sum();
                    let internal: usize = parts.internal_edges.iter().sum();
                    let expected_cross =
                        BigInt::from(k as i64 - 1) * sub.clone() + subsub.clone();
                    if BigInt::from(cross) != expected_cross {
                        return Err(format!("{cross} cross edges, expected {expected_cross}"));
                    }
                    let expected_internal =
                        BigInt::from(k) * sub_edges + subsub_edges;
                    if BigInt::from(internal) != expected_internal {
                        return Err(format!(
                            "{internal} internal edges, expected {expected_internal}"
                        ));
                    }
                    if BigInt::from(graph.edge_count()) != BigInt::from(cross) + BigInt::from(internal) {
                        return Err("cross plus internal misses the total".into());
                    }
                    Ok(())
                })(),
            );
        }

        r.tick("poly.weight_poly");
        r.check(
            &format!("weight-poly routes n={n} k={k}"),
            (|| {
                let by_recurrence = poly::weight_poly(n, k);
                let by_formula = poly::weight_poly_by_formula(n, k);
                same_poly("recurrence vs formula", &by_recurrence, &by_formula)?;
                let by_series = &poly::weight_gf(k).expand(n)[n];
                same_poly("recurrence vs series", &by_recurrence, by_series)?;
                let at_one = by_recurrence.eval(&BigInt::one());
                let order = poly::fib_k(n + 1, k);
                if at_one != order {
                    return Err(format!("W(1) = {at_one}, order {order}"));
                }
                Ok(())
            })(),
        );

        r.tick("poly.cube_poly");
        r.check(
            &format!("cube-poly routes n={n} k={k}"),
            (|| {
                let by_shift = poly::cube_poly(n, k);
                let by_formula = poly::cube_poly_by_formula(n, k);
                same_poly("shift vs formula", &by_shift, &by_formula)?;
                let by_series = &poly::cube_gf(k).expand(n)[n];
                same_poly("shift vs series", &by_shift, by_series)?;
                same_poly(
                    "shift vs W(x+1)",
                    &by_shift,
                    &poly::weight_poly(n, k).shifted(1),
                )?;
                let at_minus_one = by_shift.eval(&BigInt::from(-1));
                if !at_minus_one.is_one() {
                    return Err(format!("C(-1) = {at_minus_one}, expected 1"));
                }
                if by_shift.coeff(0) != poly::fib_k(n + 1, k) {
                    return Err(format!("constant term {} is not the order", by_shift.coeff(0)));
                }
                let edges = graphs::count_edges_closed_form(n, k).map_err(err_string)?;
                if by_shift.coeff(1) != edges {
                    return Err(format!("linear term {} is not the size {edges}", by_shift.coeff(1)));
                }
                Ok(())
            })(),
        );

        if k >= 2 {
            r.tick("poly.maximal_cube_poly");
            r.check(
                &format!("maxcube-poly routes n={n} k={k}"),
                (|| {
                    let by_recurrence = poly::maximal_cube_poly(n, k).map_err(err_string)?;
                    let by_formula =
                        poly::maximal_cube_poly_by_formula(n, k).map_err(err_string)?;
                    same_poly("recurrence vs formula", &by_recurrence, &by_formula)?;
                    let gf = poly::maximal_cube_gf(k).map_err(err_string)?;
                    same_poly("recurrence vs series", &by_recurrence, &gf.expand(n)[n])?;
                    for p in 0..=by_recurrence.degree().unwrap_or(0) {
                        if 2 * p < n && !by_recurrence.coeff(p).is_zero() {
                            return Err(format!(
                                "h_{p} = {} but 2p < n means no maximal cube",
                                by_recurrence.coeff(p)
                            ));
                        }
                    }
                    if n == 1 {
                        let expected =
                            IntPoly::from_coeffs(&[0, k as i64 - 1]);
                        same_poly("order 1 vs (k-1)x", &by_recurrence, &expected)?;
                    }
                    Ok(())
                })(),
            );
        }

        r.tick("poly.distance_cube_poly");
        r.check(
            &format!("dcube-poly routes n={n} k={k}"),
            (|| {
                let direct = poly::distance_cube_poly(n, k);
                let x_plus_q = BiPoly::x().add(&BiPoly::q());
                let via_weight = poly::weight_poly(n, k).compose_bipoly(&x_plus_q);
                same_bipoly("direct vs W(x+q)", &direct, &via_weight)?;
                let shifted = x_plus_q.add(&BiPoly::constant(-1));
                let via_cube = poly::cube_poly(n, k).compose_bipoly(&shifted);
                same_bipoly("direct vs C(x+q-1)", &direct, &via_cube)?;
                same_poly("D(x, 1) vs C(x)", &direct.eval_q(&BigInt::one()), &poly::cube_poly(n, k))?;
                same_poly("D(x, 0) vs W(x)", &direct.eval_q(&BigInt::zero()), &poly::weight_poly(n, k))?;
                Ok(())
            })(),
        );

        r.tick("poly.cube_number");
        r.tick("strings.count_ank_words");
        r.check(
            &format!("cube-number munarini n={n} k={k}"),
            (|| {
                let direct = poly::cube_number(n, k);
                let at_one = poly::cube_poly(n, k).eval(&BigInt::one());
                if direct != at_one {
                    return Err(format!("cube number {direct}, C(1) = {at_one}"));
                }
                let words = strings::count_ank_words(n, k).map_err(err_string)?;
                if direct != words {
                    return Err(format!("cube number {direct}, {words} even-run words"));
                }
                Ok(())
            })(),
        );
    }

    for &(k, order) in &b.series {
        r.tick("poly.cube_number_series");
        r.check(
            &format!("cube-number series k={k}"),
            (|| {
                let series = poly::cube_number_series(k, order).map_err(err_string)?;
                for (n, value) in series.iter().enumerate() {
                    if *value != poly::cube_number(n, k) {
                        return Err(format!(
                            "series term {n} is {value}, cube number {}",
                            poly::cube_number(n, k)
                        ));
                    }
                }
                for n in 2..series.len() {
                    let expected = BigInt::from(2 * k as i64 - 1) * &series[n - 1]
                        + BigInt::from(2) * &series[n - 2];
                    if series[n] != expected {
                        return Err(format!(
                            "series term {n} is {}, recurrence gives {expected}",
                            series[n]
                        ));
                    }
                }
                let frozen: &[u64] = match k {
                    1 => &QNUM_K1,
                    2 => &QNUM_K2,
                    _ => &[],
                };
                for (n, &expected) in frozen.iter().enumerate().take(series.len()) {
                    if series[n] != BigInt::from(expected) {
                        return Err(format!(
                            "series term {n} is {}, reference value {expected}",
                            series[n]
                        ));
                    }
                }
                Ok(())
            })(),
        );
    }

    // The explicit isomorphisms onto the binary families; construction
    // verifies bijectivity and edge preservation in both directions.
    let fib_orders: Vec<usize> = if b.munarini.iter().any(|&(_, k)| k == 1) {
        b.munarini.iter().filter(|&&(_, k)| k == 1).map(|&(n, _)| n).collect()
    } else {
        b.fibonacci.iter().map(|&n| n + 1).collect()
    };
    for n in fib_orders {
        if n == 0 {
            continue;
        }
        r.tick("graphs.iso_to_fibonacci");
        r.check(
            &format!("iso-fibonacci n={n}"),
            (|| {
                let iso = graphs::iso_to_fibonacci(n).map_err(err_string)?;
                if iso.codomain.order() != n - 1 {
                    return Err(format!(
                        "codomain has order {}, expected {}",
                        iso.codomain.order(),
                        n - 1
                    ));
                }
                Ok(())
            })(),
        );
    }

    let pell_orders: Vec<usize> = if b.munarini.iter().any(|&(_, k)| k == 2) {
        b.munarini.iter().filter(|&&(_, k)| k == 2).map(|&(n, _)| n).collect()
    } else {
        b.pell.clone()
    };
    for n in pell_orders {
        r.tick("graphs.iso_to_pell");
        r.check(
            &format!("iso-pell n={n}"),
            (|| {
                let iso = graphs::iso_to_pell(n).map_err(err_string)?;
                if iso.codomain.order() != n {
                    return Err(format!(
                        "codomain has order {}, expected {n}",
                        iso.codomain.order()
                    ));
                }
                Ok(())
            })(),
        );
    }

    for &k in &b.star {
        r.check(
            &format!("star-order k={k}"),
            (|| {
                let star = graphs::build_star(k).map_err(err_string)?;
                if BigInt::from(star.vertex_count()) != poly::fib_k(2, k) {
                    return Err(format!(
                        "star has {} vertices, F(2) = {}",
                        star.vertex_count(),
                        poly::fib_k(2, k)
                    ));
                }
                if star.edge_count() != k as usize - 1 {
                    return Err(format!(
                        "star has {} edges, expected {}",
                        star.edge_count(),
                        k - 1
                    ));
                }
                Ok(())
            })(),
        );
    }
}

// ------------------------------------------------------------------ oracle

fn census_matches_poly(census: &[u64], poly: &IntPoly) -> Result<(), String> {
    let counted = IntPoly::from_bigints(census.iter().map(|&c| BigInt::from(c)).collect());
    match poly::first_coeff_mismatch(&counted, poly) {
        None => Ok(()),
        Some((exp, left, right)) => Err(format!(
            "{left} cubes of dimension {exp} counted, polynomial says {right}"
        )),
    }
}

fn suite_oracle(r: &mut Runner, b: &ParamBox) {
    for &(n, k) in &b.munarini {
        r.check(
            &format!("oracle weights munarini n={n} k={k}"),
            (|| {
                let emb = munarini_embedded(n, k).map_err(err_string)?;
                census_matches_poly(&emb.weight_histogram(), &poly::weight_poly(n, k))
            })(),
        );

        r.tick("embedding.enumerate_cubes");
        r.check(
            &format!("oracle cubes munarini n={n} k={k}"),
            (|| {
                let emb = munarini_embedded(n, k).map_err(err_string)?;
                let cubes = emb.enumerate_cubes();
                census_matches_poly(&emb.cube_census(), &poly::cube_poly(n, k))?;
                if BigInt::from(cubes.len()) != poly::cube_number(n, k) {
                    return Err(format!(
                        "{} cubes enumerated, cube number {}",
                        cubes.len(),
                        poly::cube_number(n, k)
                    ));
                }
                Ok(())
            })(),
        );

        if k >= 2 {
            r.tick("embedding.enumerate_maximal_cubes");
            r.check(
                &format!("oracle maxcubes munarini n={n} k={k}"),
                (|| {
                    let emb = munarini_embedded(n, k).map_err(err_string)?;
                    let expected = poly::maximal_cube_poly(n, k).map_err(err_string)?;
                    census_matches_poly(&emb.maximal_cube_census(), &expected)
                })(),
            );
        }

        r.tick("embedding.distance_cube_census");
        r.check(
            &format!("oracle dcubes munarini n={n} k={k}"),
            (|| {
                let emb = munarini_embedded(n, k).map_err(err_string)?;
                let zero = emb
                    .zero_vertex()
                    .ok_or_else(|| "no all-zero label".to_string())?;
                let census = emb.distance_cube_census(zero);
                let expected = poly::distance_cube_poly(n, k);
                let counted: BTreeMap<(usize, usize), BigInt> = census
                    .iter()
                    .map(|(&key, &count)| (key, BigInt::from(count)))
                    .collect();
                let polynomial: BTreeMap<(usize, usize), BigInt> = expected
                    .terms()
                    .map(|(&key, coeff)| (key, coeff.clone()))
                    .collect();
                if counted == polynomial {
                    Ok(())
                } else {
                    Err(format!(
                        "census has {} (dimension, distance) classes, polynomial {}",
                        counted.len(),
                        polynomial.len()
                    ))
                }
            })(),
        );

        r.tick("strings.decode_psi");
        r.check(
            &format!("oracle encode-roundtrip n={n} k={k}"),
            (|| {
                let strings = strings::enumerate_pell_strings(n, k).map_err(err_string)?;
                for s in &strings {
                    let encoded = strings::encode_psi(s);
                    if encoded.label().weight() != s.weight() {
                        return Err(format!(
                            "{s} has weight {}, encoding has {}",
                            s.weight(),
                            encoded.label().weight()
                        ));
                    }
                    let decoded = strings::decode_psi(&encoded);
                    if &decoded != s {
                        return Err(format!("{s} decodes to {decoded}"));
                    }
                }
                Ok(())
            })(),
        );
    }

    // The cross-family comparison: the generalized Pell graph has the
    // same cube and maximal-cube counts, via its own computed labeling.
    for &(n, k) in &b.genpell {
        r.check(
            &format!("oracle genpell-censuses n={n} k={k}"),
            (|| {
                let emb = genpell_embedded(n, k).map_err(err_string)?;
                census_matches_poly(&emb.cube_census(), &poly::cube_poly(n, k))?;
                let expected = poly::maximal_cube_poly(n, k).map_err(err_string)?;
                census_matches_poly(&emb.maximal_cube_census(), &expected)
            })(),
        );
    }

    for &n in &b.pell {
        r.check(
            &format!("oracle pell-censuses n={n}"),
            (|| {
                let emb = pell_embedded(n).map_err(err_string)?;
                census_matches_poly(&emb.cube_census(), &poly::cube_poly(n, 2))?;
                let expected = poly::maximal_cube_poly(n, 2).map_err(err_string)?;
                census_matches_poly(&emb.maximal_cube_census(), &expected)
            })(),
        );
    }

    for &n in &b.fibonacci {
        r.check(
            &format!("oracle fibonacci-censuses n={n}"),
            (|| {
                let emb = fibonacci_embedded(n).map_err(err_string)?;
                census_matches_poly(&emb.cube_census(), &poly::cube_poly(n + 1, 1))
            })(),
        );
    }

    for &n in &b.hypercube {
        r.check(
            &format!("oracle hypercube-censuses n={n}"),
            (|| {
                let emb = hypercube_embedded(n).map_err(err_string)?;
                let expected = IntPoly::from_bigints(
                    (0..=n)
                        .map(|p| {
                            poly::binomial(n as i64, p as i64)
                                * BigInt::from(2).pow((n - p) as u32)
                        })
                        .collect(),
                );
                census_matches_poly(&emb.cube_census(), &expected)?;
                let maximal = emb.maximal_cube_census();
                let expected_maximal: Vec<u64> =
                    (0..=n).map(|p| u64::from(p == n)).collect();
                if maximal != expected_maximal {
                    return Err(format!(
                        "maximal census {maximal:?}, expected one {n}-cube"
                    ));
                }
                Ok(())
            })(),
        );
    }

    // Independent word count: filter all raw alphabet words instead of
    // using the recurrence. Kept to small sizes by the exponential cost.
    for &(n, k) in &b.munarini {
        if n > 6 || k > 3 {
            continue;
        }
        r.check(
            &format!("oracle even-run-words n={n} k={k}"),
            (|| {
                let brute = brute_even_run_words(n, k);
                let counted = strings::count_ank_words(n, k).map_err(err_string)?;
                if BigInt::from(brute) == counted {
                    Ok(())
                } else {
                    Err(format!("{brute} words by filter, {counted} by recurrence"))
                }
            })(),
        );
    }
}

/// Counts words of length n over the alphabet {0, ..., 2k} in which every
/// maximal run of 0s and every maximal run of 1s has even length, by
/// exhaustive enumeration.
fn brute_even_run_words(n: usize, k: u8) -> u64 {
    let alphabet = 2 * k as u64 + 1;
    let mut count = 0;
    let mut word = vec![0u64; n];
    loop {
        let mut valid = true;
        for symbol in [0u64, 1] {
            let mut run = 0usize;
            for i in 0..=n {
                if i < n && word[i] == symbol {
                    run += 1;
                } else {
                    if run % 2 == 1 {
                        valid = false;
                    }
                    run = 0;
                }
            }
        }
        if valid {
            count += 1;
        }
        // Odometer increment over the alphabet.
        let mut pos = n;
        while pos > 0 {
            word[pos - 1] += 1;
            if word[pos - 1] < alphabet {
                break;
            }
            word[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    count
}
