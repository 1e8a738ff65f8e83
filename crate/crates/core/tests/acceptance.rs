//! Acceptance checks: every structural result the library claims, each
//! verified over its full advertised parameter range against independent
//! computations (in-test recurrences, exhaustive enumerations, frozen
//! reference sequences). One criterion per test; each prints a summary
//! line and fails with the collected mismatch witnesses.

use std::collections::BTreeMap;

use munarini::embedding::{self, EmbeddedGraph, TripleScan};
use munarini::graphs::{self, LabeledGraph};
use munarini::poly::{self, BiPoly, IntPoly};
use munarini::strings;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Cube counts of the order-n graph at arity 1: the Jacobsthal sequence,
/// offset so that term 0 belongs to the one-vertex graph.
const QNUM_K1: [i64; 10] = [1, 1, 3, 5, 11, 21, 43, 85, 171, 341];
/// Cube counts at arity 2 (OEIS A007482).
const QNUM_K2: [i64; 9] = [1, 3, 11, 39, 139, 495, 1763, 6279, 22363];

fn report(number: usize, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("[PASS] criterion {number}: {name}");
    } else {
        println!("[FAIL] criterion {number}: {name}");
        for failure in &failures {
            println!("  - {failure}");
        }
        panic!(
            "criterion {number} ({name}): {} mismatches, first: {}",
            failures.len(),
            failures[0]
        );
    }
}

/// Independent k-Fibonacci sequence F_0..F_len-1 computed by the plain
/// recurrence, without the library.
fn fib_reference(k: u8, len: usize) -> Vec<BigInt> {
    let mut seq = Vec::with_capacity(len);
    for n in 0..len {
        let value = match n {
            0 => BigInt::zero(),
            1 => BigInt::one(),
            _ => BigInt::from(k) * &seq[n - 1] + &seq[n - 2],
        };
        seq.push(value);
    }
    seq
}

fn psi_embedded(n: usize, k: u8) -> EmbeddedGraph {
    embedding::munarini_psi(n, k).expect("valid parameters")
}

fn census_vs_poly(census: &[u64], poly: &IntPoly) -> Option<(usize, BigInt, BigInt)> {
    let counted = IntPoly::from_bigints(census.iter().map(|&c| BigInt::from(c)).collect());
    poly::first_coeff_mismatch(&counted, poly)
}

#[test]
fn criterion_01_order() {
    let mut failures = Vec::new();
    for k in 1..=4u8 {
        let fib = fib_reference(k, 11);
        for n in 0..=8usize {
            let graph = graphs::build_munarini(n, k).expect("build");
            if BigInt::from(graph.vertex_count()) != fib[n + 1] {
                failures.push(format!(
                    "n={n} k={k}: {} vertices, F({}) = {}",
                    graph.vertex_count(),
                    n + 1,
                    fib[n + 1]
                ));
            }
            let enumerated = strings::enumerate_pell_strings(n, k).expect("enumerate");
            if BigInt::from(enumerated.len()) != fib[n + 1] {
                failures.push(format!(
                    "n={n} k={k}: {} strings enumerated, F({}) = {}",
                    enumerated.len(),
                    n + 1,
                    fib[n + 1]
                ));
            }
        }
    }
    report(1, "order is the k-Fibonacci number", failures);
}

#[test]
fn criterion_02_size() {
    let mut failures = Vec::new();
    for k in 1..=4u8 {
        let fib = fib_reference(k, 11);
        // Size recurrence, seeded with the one-vertex and star cases.
        let mut recurrence: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(k - 1)];
        for n in 2..=8usize {
            let next = BigInt::from(k) * &recurrence[n - 1]
                + &recurrence[n - 2]
                + &fib[n + 1]
                - &fib[n];
            recurrence.push(next);
        }
        for n in 0..=8usize {
            let brute = BigInt::from(graphs::build_munarini(n, k).expect("build").edge_count());
            if brute != recurrence[n] {
                failures.push(format!(
                    "n={n} k={k}: built graph has {brute} edges, recurrence gives {}",
                    recurrence[n]
                ));
            }
            // Closed form, with the exactness of the division checked.
            let kk = BigInt::from(k);
            let numerator = (&kk * &kk - &kk + 2) * BigInt::from(n) * &fib[n + 1]
                + (&kk - 2) * BigInt::from(n + 1) * &fib[n];
            let denominator = &kk * &kk + 4;
            if (&numerator % &denominator) != BigInt::zero() {
                failures.push(format!("n={n} k={k}: closed form is not an integer"));
            } else if &numerator / &denominator != brute {
                failures.push(format!(
                    "n={n} k={k}: closed form {} vs {brute} edges",
                    &numerator / &denominator
                ));
            }
            let library_closed = graphs::count_edges_closed_form(n, k).expect("closed form");
            if library_closed != brute {
                failures.push(format!(
                    "n={n} k={k}: library closed form {library_closed} vs {brute} edges"
                ));
            }
            if k >= 2 {
                let genpell = graphs::build_generalized_pell(n, k).expect("build");
                if BigInt::from(genpell.edge_count()) != brute {
                    failures.push(format!(
                        "n={n} k={k}: generalized Pell graph has {} edges, {brute} expected",
                        genpell.edge_count()
                    ));
                }
            }
            if k == 2 {
                // Half the Pell number times the order: checked doubled to
                // stay in integers.
                let doubled = BigInt::from(2) * &brute;
                let product = BigInt::from(n) * &fib[n + 1];
                if doubled != product {
                    failures.push(format!(
                        "n={n}: 2|E| = {doubled} but n * P({}) = {product}",
                        n + 1
                    ));
                }
            }
        }
    }
    report(2, "size by recurrence, closed form, and both families", failures);
}

#[test]
fn criterion_03_embedding() {
    let mut failures = Vec::new();
    for k in 1..=4u8 {
        for n in 0..=6usize {
            let emb = psi_embedded(n, k);
            if let Some(v) = emb.isometry_violation() {
                failures.push(format!(
                    "n={n} k={k}: d({}, {}) = {} vs Hamming {}",
                    v.u, v.v, v.graph_distance, v.hamming_distance
                ));
                continue;
            }
            let daisy = emb.check_daisy().expect("isometric");
            if !daisy.is_daisy {
                let witness = daisy.witness.expect("witness");
                failures.push(format!(
                    "n={n} k={k}: label {} minus bit {} is missing",
                    witness.label, witness.cleared_bit
                ));
            }
            // Exhaustive triples up to 400 vertices, seeded sampling above.
            if let Some(v) = emb.median_violation(TripleScan::default()) {
                failures.push(format!(
                    "n={n} k={k}: triple {:?} majority {} is not a vertex",
                    v.triple, v.majority
                ));
            }
            // The maximal vertices are exactly the encoded zero-free
            // strings; the characterization starts at arity 2.
            if k >= 2 {
                let mut expected: Vec<_> = strings::enumerate_maximal_strings(n, k)
                    .expect("arity >= 2")
                    .iter()
                    .map(|s| strings::encode_psi(s).into_label())
                    .collect();
                expected.sort();
                if daisy.maximal_labels != expected {
                    failures.push(format!(
                        "n={n} k={k}: {} maximal labels, {} zero-free encodings",
                        daisy.maximal_labels.len(),
                        expected.len()
                    ));
                }
            }
        }
    }
    report(3, "embedding is isometric, daisy, and median closed", failures);
}

#[test]
fn criterion_04_polynomial_routes_and_censuses() {
    let mut failures = Vec::new();
    // Three independent routes to each polynomial.
    for k in 1..=5u8 {
        let weight_series = poly::weight_gf(k).expand(10);
        let cube_series = poly::cube_gf(k).expand(10);
        let maximal_series = (k >= 2).then(|| poly::maximal_cube_gf(k).expect("arity").expand(10));
        for n in 0..=10usize {
            for (name, recurrence, formula, series) in [
                (
                    "weight",
                    poly::weight_poly(n, k),
                    poly::weight_poly_by_formula(n, k),
                    &weight_series[n],
                ),
                (
                    "cube",
                    poly::cube_poly(n, k),
                    poly::cube_poly_by_formula(n, k),
                    &cube_series[n],
                ),
            ] {
                if let Some((exp, a, b)) = poly::first_coeff_mismatch(&recurrence, &formula) {
                    failures.push(format!(
                        "{name} n={n} k={k}: recurrence vs formula at x^{exp}: {a} vs {b}"
                    ));
                }
                if let Some((exp, a, b)) = poly::first_coeff_mismatch(&recurrence, series) {
                    failures.push(format!(
                        "{name} n={n} k={k}: recurrence vs series at x^{exp}: {a} vs {b}"
                    ));
                }
            }
            if let Some(series) = &maximal_series {
                let recurrence = poly::maximal_cube_poly(n, k).expect("arity");
                let formula = poly::maximal_cube_poly_by_formula(n, k).expect("arity");
                if let Some((exp, a, b)) = poly::first_coeff_mismatch(&recurrence, &formula) {
                    failures.push(format!(
                        "maximal n={n} k={k}: recurrence vs formula at x^{exp}: {a} vs {b}"
                    ));
                }
                if let Some((exp, a, b)) = poly::first_coeff_mismatch(&recurrence, &series[n]) {
                    failures.push(format!(
                        "maximal n={n} k={k}: recurrence vs series at x^{exp}: {a} vs {b}"
                    ));
                }
            }
        }
    }
    // Brute-force censuses from the actual embedded graphs.
    for k in 1..=4u8 {
        for n in 0..=6usize {
            let emb = psi_embedded(n, k);
            if let Some((exp, counted, expected)) =
                census_vs_poly(&emb.weight_histogram(), &poly::weight_poly(n, k))
            {
                failures.push(format!(
                    "weights n={n} k={k}: {counted} vertices of weight {exp}, expected {expected}"
                ));
            }
            if let Some((exp, counted, expected)) =
                census_vs_poly(&emb.cube_census(), &poly::cube_poly(n, k))
            {
                failures.push(format!(
                    "cubes n={n} k={k}: {counted} of dimension {exp}, expected {expected}"
                ));
            }
            if k >= 2 {
                let expected = poly::maximal_cube_poly(n, k).expect("arity");
                if let Some((exp, counted, want)) =
                    census_vs_poly(&emb.maximal_cube_census(), &expected)
                {
                    failures.push(format!(
                        "maximal n={n} k={k}: {counted} of dimension {exp}, expected {want}"
                    ));
                }
            }
            let zero = emb.zero_vertex().expect("zero vertex");
            let census: BTreeMap<(usize, usize), BigInt> = emb
                .distance_cube_census(zero)
                .into_iter()
                .map(|(key, count)| (key, BigInt::from(count)))
                .collect();
            let refined: BTreeMap<(usize, usize), BigInt> = poly::distance_cube_poly(n, k)
                .terms()
                .map(|(&key, coeff)| (key, coeff.clone()))
                .collect();
            if census != refined {
                failures.push(format!(
                    "distance census n={n} k={k}: {} classes counted, {} expected",
                    census.len(),
                    refined.len()
                ));
            }
        }
    }
    report(4, "polynomials agree across routes and with brute censuses", failures);
}

#[test]
fn criterion_05_identities() {
    let mut failures = Vec::new();
    for k in 1..=5u8 {
        for n in 0..=10usize {
            let weight = poly::weight_poly(n, k);
            let cube = poly::cube_poly(n, k);
            if let Some((exp, a, b)) = poly::first_coeff_mismatch(&cube, &weight.shifted(1)) {
                failures.push(format!(
                    "n={n} k={k}: C vs W(x+1) at x^{exp}: {a} vs {b}"
                ));
            }
            let x_plus_q_minus_1 = BiPoly::x().add(&BiPoly::q()).add(&BiPoly::constant(-1));
            let via_cube = cube.compose_bipoly(&x_plus_q_minus_1);
            let direct = poly::distance_cube_poly(n, k);
            if !direct.terms().eq(via_cube.terms()) {
                failures.push(format!("n={n} k={k}: D(x,q) differs from C(x+q-1)"));
            }
            let at_minus_one = cube.eval(&BigInt::from(-1));
            if !at_minus_one.is_one() {
                failures.push(format!("n={n} k={k}: C(-1) = {at_minus_one}"));
            }
            let cube_number = poly::cube_number(n, k);
            if cube.eval(&BigInt::one()) != cube_number {
                failures.push(format!(
                    "n={n} k={k}: C(1) = {} vs cube number {cube_number}",
                    cube.eval(&BigInt::one())
                ));
            }
            let words = strings::count_ank_words(n, k).expect("count");
            if words != cube_number {
                failures.push(format!(
                    "n={n} k={k}: {words} even-run words vs cube number {cube_number}"
                ));
            }
            let total = weight.derivative().eval(&BigInt::one());
            let edges = graphs::count_edges_closed_form(n, k).expect("closed form");
            if total != edges {
                failures.push(format!("n={n} k={k}: W'(1) = {total} vs {edges} edges"));
            }
            if poly::total_weight(n, k) != edges {
                failures.push(format!(
                    "n={n} k={k}: total weight {} vs {edges} edges",
                    poly::total_weight(n, k)
                ));
            }
        }
    }
    // Independent raw-alphabet count of the even-run words.
    for k in 1..=3u8 {
        for n in 0..=6usize {
            let brute = brute_even_run_words(n, k);
            let counted = strings::count_ank_words(n, k).expect("count");
            if BigInt::from(brute) != counted {
                failures.push(format!(
                    "n={n} k={k}: {brute} words by exhaustive filter, {counted} by recurrence"
                ));
            }
        }
    }
    report(5, "counting identities hold exactly", failures);
}

#[test]
fn criterion_06_cross_family_polynomials() {
    let mut failures = Vec::new();
    for k in 2..=4u8 {
        for n in 0..=6usize {
            let graph = graphs::build_generalized_pell(n, k).expect("build");
            let emb = embedding::theta_labeling(graph, 0).expect("computed labeling");
            if let Some((exp, counted, expected)) =
                census_vs_poly(&emb.cube_census(), &poly::cube_poly(n, k))
            {
                failures.push(format!(
                    "cubes n={n} k={k}: {counted} of dimension {exp}, expected {expected}"
                ));
            }
            let maximal = poly::maximal_cube_poly(n, k).expect("arity");
            if let Some((exp, counted, expected)) =
                census_vs_poly(&emb.maximal_cube_census(), &maximal)
            {
                failures.push(format!(
                    "maximal n={n} k={k}: {counted} of dimension {exp}, expected {expected}"
                ));
            }
        }
    }
    report(6, "both families share cube and maximal-cube polynomials", failures);
}

#[test]
fn criterion_07_cube_number_sequences() {
    let mut failures = Vec::new();
    for k in 1..=4u8 {
        let series = poly::cube_number_series(k, 9).expect("series");
        // Reference terms: frozen prefixes for the two classical arities,
        // and for the rest the recurrence a(n) = (2k-1)a(n-1) + 2a(n-2)
        // seeded with a(0) = 1, a(1) = 2k-1.
        let reference: Vec<BigInt> = match k {
            1 => QNUM_K1.iter().map(|&v| BigInt::from(v)).collect(),
            2 => QNUM_K2.iter().map(|&v| BigInt::from(v)).collect(),
            _ => {
                let mut seq = vec![BigInt::one(), BigInt::from(2 * k as i64 - 1)];
                for n in 2..=9 {
                    let next = BigInt::from(2 * k as i64 - 1) * &seq[n - 1]
                        + BigInt::from(2) * &seq[n - 2];
                    seq.push(next);
                }
                seq
            }
        };
        assert!(reference.len() >= 8, "at least 8 reference terms");
        for (n, expected) in reference.iter().enumerate() {
            if series.get(n).is_none() || &series[n] != expected {
                failures.push(format!(
                    "k={k} term {n}: series {:?} vs reference {expected}",
                    series.get(n)
                ));
            }
            if &poly::cube_number(n, k) != expected {
                failures.push(format!(
                    "k={k} term {n}: cube number {} vs reference {expected}",
                    poly::cube_number(n, k)
                ));
            }
        }
    }
    report(7, "cube-number series match the reference sequences", failures);
}

/// Re-verifies a claimed isomorphism from scratch: mutual inverse maps
/// that carry edges to edges in both directions.
fn verify_isomorphism(
    domain: &LabeledGraph,
    codomain: &LabeledGraph,
    forward: &[usize],
    backward: &[usize],
) -> Result<(), String> {
    if domain.vertex_count() != codomain.vertex_count() {
        return Err(format!(
            "{} vs {} vertices",
            domain.vertex_count(),
            codomain.vertex_count()
        ));
    }
    if domain.edge_count() != codomain.edge_count() {
        return Err(format!(
            "{} vs {} edges",
            domain.edge_count(),
            codomain.edge_count()
        ));
    }
    for u in 0..domain.vertex_count() {
        if forward[u] >= codomain.vertex_count() || backward[forward[u]] != u {
            return Err(format!("maps are not mutually inverse at vertex {u}"));
        }
    }
    for &(u, v) in domain.edges() {
        if !codomain.has_edge(forward[u], forward[v]) {
            return Err(format!("edge ({u}, {v}) has no image"));
        }
    }
    for &(u, v) in codomain.edges() {
        if !domain.has_edge(backward[u], backward[v]) {
            return Err(format!("codomain edge ({u}, {v}) has no preimage"));
        }
    }
    Ok(())
}

#[test]
fn criterion_08_isomorphisms() {
    let mut failures = Vec::new();
    for n in 1..=9usize {
        match graphs::iso_to_fibonacci(n) {
            Ok(iso) => {
                if let Err(witness) =
                    verify_isomorphism(&iso.domain, &iso.codomain, &iso.forward, &iso.backward)
                {
                    failures.push(format!("fibonacci n={n}: {witness}"));
                }
                if iso.codomain.order() != n - 1 {
                    failures.push(format!(
                        "fibonacci n={n}: codomain order {}",
                        iso.codomain.order()
                    ));
                }
            }
            Err(err) => failures.push(format!("fibonacci n={n}: {err}")),
        }
    }
    for n in 0..=7usize {
        match graphs::iso_to_pell(n) {
            Ok(iso) => {
                if let Err(witness) =
                    verify_isomorphism(&iso.domain, &iso.codomain, &iso.forward, &iso.backward)
                {
                    failures.push(format!("pell n={n}: {witness}"));
                }
            }
            Err(err) => failures.push(format!("pell n={n}: {err}")),
        }
    }
    report(8, "explicit isomorphisms onto the binary families", failures);
}

#[test]
fn criterion_09_non_daisy_witness() {
    let mut failures = Vec::new();
    for k in 2..=4u8 {
        for n in 2..=5usize {
            let linear = poly::weight_poly(n, k).coeff(1);
            let expected_linear = BigInt::from(k as i64 * n as i64 - 1);
            if linear != expected_linear {
                failures.push(format!(
                    "n={n} k={k}: weight linear coefficient {linear}, kn-1 = {expected_linear}"
                ));
                continue;
            }
            let genpell = graphs::build_generalized_pell(n, k).expect("build");
            let measured = genpell.max_degree();
            if k >= 3 {
                // The degree argument: a proper embedding would force the
                // maximum degree to be the linear coefficient.
                if measured != 2 * n {
                    failures.push(format!(
                        "n={n} k={k}: maximum degree {measured}, expected 2n = {}",
                        2 * n
                    ));
                }
                if BigInt::from(measured) == expected_linear {
                    failures.push(format!(
                        "n={n} k={k}: no degree conflict, {measured} matches kn-1"
                    ));
                }
            } else if BigInt::from(measured) != expected_linear {
                failures.push(format!(
                    "n={n} k=2: maximum degree {measured} contradicts kn-1 = {expected_linear}"
                ));
            }
            let witness = poly::max_degree_witness(n, k).expect("witness");
            if witness.genpell_max_degree != Some(measured)
                || witness.weight_linear_coeff != expected_linear
            {
                failures.push(format!("n={n} k={k}: witness disagrees with direct scan"));
            }
        }
    }
    report(9, "degree argument separates the two families", failures);
}

#[test]
fn criterion_10_degenerate_cases() {
    let mut failures = Vec::new();
    // Order zero is the one-vertex graph for every sequence family.
    let mut order_zero: Vec<(String, LabeledGraph)> = Vec::new();
    for k in 1..=5u8 {
        order_zero.push((format!("munarini k={k}"), graphs::build_munarini(0, k).expect("build")));
    }
    for k in 2..=5u8 {
        order_zero.push((
            format!("genpell k={k}"),
            graphs::build_generalized_pell(0, k).expect("build"),
        ));
    }
    order_zero.push(("fibonacci".into(), graphs::build_fibonacci_cube(0).expect("build")));
    order_zero.push(("pell".into(), graphs::build_pell(0).expect("build")));
    order_zero.push(("hypercube".into(), graphs::build_hypercube(0).expect("build")));
    for (name, graph) in &order_zero {
        if graph.vertex_count() != 1 || graph.edge_count() != 0 {
            failures.push(format!(
                "{name}: order 0 gives {} vertices, {} edges",
                graph.vertex_count(),
                graph.edge_count()
            ));
        }
    }
    // Order one is the star: center 0 adjacent to each nonzero symbol.
    for k in 1..=5u8 {
        let graph = graphs::build_munarini(1, k).expect("build");
        let expected_labels: Vec<String> = (0..k).map(|c| c.to_string()).collect();
        let labels: Vec<String> = graph.labels().iter().map(|l| l.to_string()).collect();
        let expected_edges: Vec<(usize, usize)> = (1..k as usize).map(|i| (0, i)).collect();
        if labels != expected_labels || graph.edges() != expected_edges.as_slice() {
            failures.push(format!("munarini n=1 k={k} is not the expected star"));
        }
        let star = graphs::build_star(k).expect("build");
        if star.labels() != graph.labels() || star.edges() != graph.edges() {
            failures.push(format!("star k={k} differs from the order-1 graph"));
        }
    }
    // Maximal-cube polynomial degenerates.
    for k in 2..=5u8 {
        let order_one = poly::maximal_cube_poly(1, k).expect("arity");
        if order_one != IntPoly::from_coeffs(&[0, k as i64 - 1]) {
            failures.push(format!("maximal polynomial at n=1 k={k} is {order_one}"));
        }
        for n in 0..=10usize {
            let poly = poly::maximal_cube_poly(n, k).expect("arity");
            for (p, coeff) in poly.coeffs().iter().enumerate() {
                if 2 * p < n && !coeff.is_zero() {
                    failures.push(format!(
                        "n={n} k={k}: h_{p} = {coeff} below the halfway dimension"
                    ));
                }
                if coeff.is_negative() {
                    failures.push(format!("n={n} k={k}: negative count h_{p} = {coeff}"));
                }
            }
        }
    }
    report(10, "degenerate orders and coefficients behave", failures);
}

/// Counts words of length n over {0, ..., 2k} whose maximal runs of 0s
/// and of 1s all have even length, by exhaustive filter.
fn brute_even_run_words(n: usize, k: u8) -> u64 {
    let alphabet = 2 * u32::from(k) + 1;
    let mut count = 0;
    let total = (alphabet as u64).pow(n as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            word.push((rest % alphabet as u64) as u32);
            rest /= alphabet as u64;
        }
        let even_runs = |symbol: u32| {
            let mut run = 0usize;
            for i in 0..=n {
                if i < n && word[i] == symbol {
                    run += 1;
                } else {
                    if run % 2 == 1 {
                        return false;
                    }
                    run = 0;
                }
            }
            true
        };
        if even_runs(0) && even_runs(1) {
            count += 1;
        }
    }
    count
}
