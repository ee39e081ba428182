//! Acceptance suite: every criterion as one test, exact arithmetic
//! throughout (tolerance zero), with one PASS line printed per criterion.
//!
//! Run with `cargo test -p pfb-cli --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use num::{BigRational, One};
use pfb_core::algebra::{AlgebraElement, CliffordExponent, GrassmannExponent, Monomial, Space};
use pfb_core::basis::{
    build_basis, d_lambda, gamma_of, leading_monomial, omega_via_definition,
    omega_via_restricted, span_rank, transition_matrix,
};
use pfb_core::tableaux::{
    enumerate_a_restricted, enumerate_ssyt, kostka, partition_cmp, partitions_of, tableau_cmp,
    weight_cmp, weight_space_dim, weights_up_to, Partition, Tableau, Weight,
};
use pfb_core::verify::{verify_adjointness, verify_triple_relations, DEFAULT_CAPACITY_BITS};

const CONFIGS: [(usize, usize); 5] = [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)];

fn tab(rows: &[&[usize]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn worked_tableau() -> Tableau {
    tab(&[&[1, 1, 3], &[2, 2]])
}

/// The nine-term expansion of the worked vector with its printed signs.
fn worked_expansion(space: Space) -> AlgebraElement {
    let terms: [(i64, &[(usize, usize)], &str); 9] = [
        (1, &[(1, 1), (2, 1), (1, 2), (2, 2), (3, 3)], "001"),
        (-1, &[(1, 1), (2, 1), (1, 2), (2, 3), (3, 3)], "010"),
        (-1, &[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)], "100"),
        (-1, &[(1, 1), (2, 1), (2, 2), (3, 2), (1, 3)], "001"),
        (1, &[(1, 1), (2, 1), (3, 2), (1, 3), (2, 3)], "010"),
        (-1, &[(1, 1), (2, 2), (3, 2), (1, 3), (2, 3)], "100"),
        (-1, &[(2, 1), (3, 1), (1, 2), (2, 2), (1, 3)], "001"),
        (-1, &[(2, 1), (3, 1), (1, 2), (1, 3), (2, 3)], "010"),
        (1, &[(3, 1), (1, 2), (2, 2), (1, 3), (2, 3)], "100"),
    ];
    let mut out = space.zero();
    for (sign, factors, eta) in terms {
        let (gamma, reorder) = GrassmannExponent::normal_order(3, 3, factors)
            .unwrap()
            .expect("distinct factors");
        assert_eq!(reorder, 1);
        let mono = Monomial::new(gamma, CliffordExponent::from_bit_string(eta, 3).unwrap()).unwrap();
        let term =
            AlgebraElement::from_monomial(mono, BigRational::from_integer(sign.into())).unwrap();
        out = &out + &term;
    }
    out
}

#[test]
fn criterion_01_triple_relations() {
    for (m, p) in CONFIGS {
        let started = Instant::now();
        let report = verify_triple_relations(m, p, DEFAULT_CAPACITY_BITS).unwrap();
        let elapsed = started.elapsed();
        assert!(
            report.passed(),
            "({}, {}): {} failures, first: {:?}",
            m,
            p,
            report.failures.len(),
            report.failures.first()
        );
        assert_eq!(
            report.total_checks,
            6 * (m as u64).pow(3) * (1u64 << (m * p + p))
        );
        assert!(elapsed < Duration::from_secs(60), "({}, {}) took {:?}", m, p, elapsed);
    }
    println!("criterion 01 (triple relations, exact, 5 configurations): PASS");
}

#[test]
fn criterion_02_adjointness() {
    for (m, p) in CONFIGS {
        let started = Instant::now();
        let report = verify_adjointness(m, p, DEFAULT_CAPACITY_BITS).unwrap();
        let elapsed = started.elapsed();
        assert!(report.passed(), "({}, {}) has failures", m, p);
        let monomials = 1u64 << (m * p + p);
        assert_eq!(report.total_checks, m as u64 * monomials * monomials);
        assert!(elapsed < Duration::from_secs(30), "({}, {}) took {:?}", m, p, elapsed);
    }
    println!("criterion 02 (adjointness over all basis pairs, exact, 5 configurations): PASS");
}

#[test]
fn criterion_03_worked_expansion_both_routes() {
    let started = Instant::now();
    let space = Space::new(3, 3).unwrap();
    let a = worked_tableau();
    let expected = worked_expansion(space);

    let by_definition = omega_via_definition(space, &a).unwrap();
    let by_expansion = omega_via_restricted(space, &a).unwrap();
    assert_eq!(by_definition.value, expected, "definition route");
    assert_eq!(by_expansion.value, expected, "expansion route");

    let leading = leading_monomial(&a, 3, 3).unwrap();
    assert!(expected.coeff(&leading.monomial()).is_one());
    assert!(started.elapsed() < Duration::from_secs(1));
    println!("criterion 03 (worked nine-term expansion, both routes, signs exact): PASS");
}

#[test]
fn criterion_04_restricted_fillings_count() {
    let started = Instant::now();
    let fillings = enumerate_a_restricted(&worked_tableau(), 3).unwrap();
    assert_eq!(fillings.len(), 9);
    assert!(started.elapsed() < Duration::from_secs(1));
    println!("criterion 04 (nine restricted fillings of the worked tableau): PASS");
}

#[test]
fn criterion_05_leading_monomial_data() {
    let a = worked_tableau();
    let gamma = gamma_of(&a, 3, 3).unwrap();
    assert_eq!(gamma.to_row_major_bits(), "110110001");

    let conjugate = a.shape().conjugate();
    assert_eq!(conjugate, Partition::new(vec![2, 2, 1]).unwrap());

    let leading = leading_monomial(&a, 3, 3).unwrap();
    assert_eq!(leading.eta.to_bit_string(), "001");

    // The column-labelled filling reproduces the leading monomial exactly.
    let d = d_lambda(&a.shape());
    let factors: Vec<(usize, usize)> = a
        .boxes()
        .zip(d.boxes())
        .map(|((_, _, i), (_, _, alpha))| (i, alpha))
        .collect();
    let (got_gamma, theta_sign) = GrassmannExponent::normal_order(3, 3, &factors)
        .unwrap()
        .expect("distinct");
    let word: Vec<usize> = d.boxes().map(|(_, _, alpha)| alpha).collect();
    let (got_eta, e_sign) = CliffordExponent::normal_order(3, &word).unwrap();
    assert_eq!(theta_sign * e_sign, 1);
    assert_eq!(got_gamma, leading.gamma);
    assert_eq!(got_eta, leading.eta);
    println!("criterion 05 (leading monomial data of the worked tableau, exact): PASS");
}

#[test]
fn criterion_06_ordering_chains() {
    // The CLI prints the thirteen tableaux in the reference order.
    let out = Command::new(env!("CARGO_BIN_EXE_pfb"))
        .args(["tableaux", "order", "--weight", "2,1,1,1", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let got: Vec<serde_json::Value> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["rows"].clone())
        .collect();
    let expected = [
        serde_json::json!([[1, 1], [2], [3], [4]]),
        serde_json::json!([[1, 1], [2, 4], [3]]),
        serde_json::json!([[1, 1, 4], [2], [3]]),
        serde_json::json!([[1, 1], [2, 3], [4]]),
        serde_json::json!([[1, 1, 4], [2, 3]]),
        serde_json::json!([[1, 1, 3], [2], [4]]),
        serde_json::json!([[1, 1, 3], [2, 4]]),
        serde_json::json!([[1, 1, 3, 4], [2]]),
        serde_json::json!([[1, 1, 2], [3], [4]]),
        serde_json::json!([[1, 1, 2], [3, 4]]),
        serde_json::json!([[1, 1, 2, 4], [3]]),
        serde_json::json!([[1, 1, 2, 3], [4]]),
        serde_json::json!([[1, 1, 2, 3, 4]]),
    ];
    assert_eq!(got.as_slice(), expected.as_slice());

    // Reference chain of the weight order on N_0^3 up to degree 3.
    let weight_chain: Vec<Vec<usize>> = vec![
        vec![0, 0, 0],
        vec![0, 0, 1],
        vec![0, 1, 0],
        vec![1, 0, 0],
        vec![0, 0, 2],
        vec![0, 1, 1],
        vec![0, 2, 0],
        vec![1, 0, 1],
        vec![1, 1, 0],
        vec![2, 0, 0],
        vec![0, 0, 3],
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![0, 3, 0],
        vec![1, 0, 2],
        vec![1, 1, 1],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
        vec![3, 0, 0],
    ];
    let got: Vec<Vec<usize>> = weights_up_to(3, 3)
        .iter()
        .map(|w| w.counts().to_vec())
        .collect();
    assert_eq!(got, weight_chain);
    for pair in weights_up_to(3, 3).windows(2) {
        assert_eq!(
            weight_cmp(&pair[0], &pair[1]).unwrap(),
            std::cmp::Ordering::Less
        );
    }

    // Reference chain of the partition order up to four boxes.
    let partition_chain: Vec<Vec<usize>> = vec![
        vec![],
        vec![1],
        vec![1, 1],
        vec![2],
        vec![1, 1, 1],
        vec![2, 1],
        vec![3],
        vec![1, 1, 1, 1],
        vec![2, 1, 1],
        vec![2, 2],
        vec![3, 1],
        vec![4],
    ];
    let mut all: Vec<Partition> = (0..=4)
        .flat_map(|n| partitions_of(n, n.max(1), n.max(1)))
        .collect();
    all.sort_by(partition_cmp);
    let got: Vec<Vec<usize>> = all.iter().map(|p| p.parts().to_vec()).collect();
    assert_eq!(got, partition_chain);

    println!("criterion 06 (thirteen-tableau chain via the CLI and both reference order chains): PASS");
}

#[test]
fn criterion_07_triangularity_sweep() {
    let started = Instant::now();
    let mut spaces = 0usize;
    for (m, p) in [(2, 2), (3, 3)] {
        for mu in weights_up_to(m, 5) {
            let report = transition_matrix(m, p, &mu).unwrap();
            let n = report.tableaux.len();
            for r in 0..n {
                assert!(
                    report.matrix[r][r].is_one(),
                    "diagonal at ({}, {}), mu {}, row {}",
                    m,
                    p,
                    mu,
                    r
                );
                for c in r + 1..n {
                    assert!(
                        report.matrix[r][c] == BigRational::from_integer(0.into()),
                        "zero pattern at ({}, {}), mu {}, probe {}, vector {}",
                        m,
                        p,
                        mu,
                        r,
                        c
                    );
                }
            }
            assert!(report.diag_ones && report.triangular && report.support_ok);
            spaces += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "sweep took {:?}", elapsed);
    println!(
        "criterion 07 (unit diagonal and triangular zeros across {} weight spaces): PASS",
        spaces
    );
}

#[test]
fn criterion_08_dimension_consistency() {
    let mut checked = 0usize;
    for (m, p) in [(2, 2), (3, 2), (2, 3)] {
        for mu in weights_up_to(m, 5) {
            let count = build_basis(m, p, &mu).unwrap().entries.len();
            let dim = weight_space_dim(&mu, p);
            let rank = span_rank(m, p, &mu).unwrap();
            assert_eq!(count, dim, "count vs dim at ({}, {}), mu {}", m, p, mu);
            assert_eq!(rank, dim, "rank vs dim at ({}, {}), mu {}", m, p, mu);
            checked += 1;
        }
    }
    println!(
        "criterion 08 (basis count = tableau dimension = word-span rank, {} weights): PASS",
        checked
    );
}

#[test]
fn criterion_09_nonvanishing_criterion() {
    let mut checked = 0usize;
    for m in 1..=3usize {
        for p in 1..=3usize {
            let space = Space::new(m, p).unwrap();
            for mu in weights_up_to(m, 6) {
                for a in enumerate_ssyt(&mu, None) {
                    let omega = omega_via_restricted(space, &a).unwrap();
                    let too_wide = a.shape().part(1) > p;
                    assert_eq!(
                        omega.value.is_zero(),
                        too_wide,
                        "tableau {} at ({}, {})",
                        a,
                        m,
                        p
                    );
                    checked += 1;
                }
            }
        }
    }
    println!(
        "criterion 09 (vanishing exactly beyond the column bound, {} tableaux): PASS",
        checked
    );
}

#[test]
fn criterion_10_cartan_eigenvalues() {
    let mut checked = 0usize;
    for (m, p) in [(2, 2), (3, 2), (2, 3)] {
        let space = Space::new(m, p).unwrap();
        let cartans: Vec<_> = (1..=m).map(|i| space.cartan_h(i).unwrap()).collect();
        for mu in weights_up_to(m, 5) {
            for entry in build_basis(m, p, &mu).unwrap().entries {
                for (i, h) in cartans.iter().enumerate() {
                    let eigenvalue = BigRational::new(
                        (2 * mu.count(i + 1) as i64 - p as i64).into(),
                        2.into(),
                    );
                    assert_eq!(
                        h.apply(&entry.omega),
                        entry.omega.scale(&eigenvalue),
                        "h_{} at ({}, {}), tableau {}",
                        i + 1,
                        m,
                        p,
                        entry.tableau
                    );
                    checked += 1;
                }
            }
        }
    }
    println!(
        "criterion 10 (cartan eigenvalues mu_i - p/2, {} instances, exact rationals): PASS",
        checked
    );
}

#[test]
fn criterion_11_single_letter_total_dimension() {
    for p in 1..=5usize {
        let total: usize = weights_up_to(1, p + 1)
            .iter()
            .map(|mu| build_basis(1, p, mu).unwrap().entries.len())
            .sum();
        assert_eq!(total, p + 1, "total dimension at p = {}", p);
    }
    println!("criterion 11 (single-letter module has total dimension p+1 for p = 1..=5): PASS");
}

#[test]
fn criterion_12_property_suite() {
    // Construction-route equality across every tableau of every weight with
    // at most five boxes, at all ambients with m, p <= 3.
    let mut routes = 0usize;
    for m in 1..=3usize {
        for p in 1..=3usize {
            let space = Space::new(m, p).unwrap();
            for mu in weights_up_to(m, 5) {
                for a in enumerate_ssyt(&mu, None) {
                    let by_def = omega_via_definition(space, &a).unwrap();
                    let by_exp = omega_via_restricted(space, &a).unwrap();
                    assert_eq!(by_def.value, by_exp.value, "routes at {} ({}, {})", a, m, p);
                    routes += 1;
                }
            }
        }
    }

    // Conjugation is an involution on all partitions with at most twelve
    // boxes.
    for n in 0..=12usize {
        for shape in partitions_of(n, n.max(1), n.max(1)) {
            assert_eq!(shape.conjugate().conjugate(), shape);
        }
    }

    // Total-order axioms on the enumerated tableaux of every weight with at
    // most six boxes over three letters.
    for mu in weights_up_to(3, 6) {
        let all = enumerate_ssyt(&mu, None);
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(tableau_cmp(a, b), i.cmp(&j));
            }
        }
    }

    // Kostka numbers partition the enumeration by shape.
    for mu in weights_up_to(3, 5) {
        for p in 1..=3usize {
            let all = enumerate_ssyt(&mu, Some(p));
            let by_kostka: usize = partitions_of(mu.total(), 3, p)
                .iter()
                .map(|shape| kostka(shape, &mu))
                .sum();
            assert_eq!(all.len(), by_kostka);
            for shape in partitions_of(mu.total(), 3, p) {
                let grouped = all.iter().filter(|t| t.shape() == shape).count();
                assert_eq!(grouped, kostka(&shape, &mu));
            }
        }
    }

    println!(
        "criterion 12 (route equality on {} tableaux, conjugate involution, order axioms, Kostka partitioning): PASS",
        routes
    );
}

// Sanity anchor for the suite itself: the weights swept above stay within
// the span-rank guard.
#[test]
fn sweep_weights_fit_the_span_guard() {
    for (m, _) in [(2usize, 2usize), (3, 2), (2, 3)] {
        for mu in weights_up_to(m, 5) {
            assert!(mu.total() <= pfb_core::basis::SPAN_GUARD_BOXES);
        }
    }
    let _ = Weight::new(vec![0]);
}
