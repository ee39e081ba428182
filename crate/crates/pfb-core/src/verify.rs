//! Exhaustive exact verification of the operator identities at a given
//! (m, p): the six double-commutator relations, adjointness of the vector
//! variables and Dirac operators, character/dimension consistency, and the
//! structure of the tableau bases.
//!
//! Every failed instance is recorded as a typed [`Check`] that can be
//! re-evaluated standalone through [`replay`], so a report is always
//! reproducible from its witnesses. Checking identities on basis monomials
//! suffices: all operators involved are linear.

use std::time::Instant;

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    AlgebraElement, CliffordExponent, GrassmannExponent, LinearOperator, Monomial, Space,
};
use crate::basis::{
    build_basis, elements_rank, omega_via_definition, omega_via_restricted, BasisEntry,
};
use crate::error::{Error, Result};
use crate::tableaux::{
    enumerate_ssyt, kostka, partitions_of, weight_space_dim, weights_up_to, Tableau, Weight,
};

/// Default bound on mp + p for suites that enumerate all basis monomials.
pub const DEFAULT_CAPACITY_BITS: usize = 16;

/// The six double-commutator identities, named by their operator pattern.
/// With Θ for the vector variables and D for the Dirac operators:
///
/// - `Dtt`: [[D_j, Θ_k], Θ_l] = −2 δ_{jl} Θ_k
/// - `Ddt`: [[D_j, D_k], Θ_l] = 2 δ_{kl} D_j − 2 δ_{jl} D_k
/// - `Ddd`: [[D_j, D_k], D_l] = 0
/// - `Dtd`: [[D_j, Θ_k], D_l] = 2 δ_{kl} D_j
/// - `Ttd`: [[Θ_j, Θ_k], D_l] = 2 δ_{kl} Θ_j − 2 δ_{jl} Θ_k
/// - `Ttt`: [[Θ_j, Θ_k], Θ_l] = 0
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleRel {
    Dtt,
    Ddt,
    Ddd,
    Dtd,
    Ttd,
    Ttt,
}

impl TripleRel {
    pub const ALL: [TripleRel; 6] = [
        TripleRel::Dtt,
        TripleRel::Ddt,
        TripleRel::Ddd,
        TripleRel::Dtd,
        TripleRel::Ttd,
        TripleRel::Ttt,
    ];

    pub fn describe(&self, j: usize, k: usize, l: usize) -> String {
        match self {
            TripleRel::Dtt => format!("[[D_{j},Th_{k}],Th_{l}] = -2 d({j},{l}) Th_{k}"),
            TripleRel::Ddt => {
                format!("[[D_{j},D_{k}],Th_{l}] = 2 d({k},{l}) D_{j} - 2 d({j},{l}) D_{k}")
            }
            TripleRel::Ddd => format!("[[D_{j},D_{k}],D_{l}] = 0"),
            TripleRel::Dtd => format!("[[D_{j},Th_{k}],D_{l}] = 2 d({k},{l}) D_{j}"),
            TripleRel::Ttd => {
                format!("[[Th_{j},Th_{k}],D_{l}] = 2 d({k},{l}) Th_{j} - 2 d({j},{l}) Th_{k}")
            }
            TripleRel::Ttt => format!("[[Th_{j},Th_{k}],Th_{l}] = 0"),
        }
    }
}

/// A single verifiable instance; serializable so that failures can be
/// replayed later. Exponent strings use the row-major bit encoding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// One triple relation applied to one basis monomial.
    Triple {
        rel: TripleRel,
        j: usize,
        k: usize,
        l: usize,
        gamma: String,
        eta: String,
    },
    /// ⟨Θ_i v, w⟩ = ⟨v, D_i w⟩ for one pair of basis monomials.
    Adjoint {
        i: usize,
        v_gamma: String,
        v_eta: String,
        w_gamma: String,
        w_eta: String,
    },
    /// Per-weight equality of the word-span rank, the Kostka sum, and the
    /// bounded-column tableau count, plus the weight-support criterion.
    Character { mu: Vec<usize> },
    /// The probe of a tableau against its own vector equals 1.
    BasisDiagonal {
        mu: Vec<usize>,
        tableau: Vec<Vec<usize>>,
    },
    /// The probe of a smaller tableau against a larger vector equals 0.
    BasisTriangular {
        mu: Vec<usize>,
        probe: Vec<Vec<usize>>,
        vector: Vec<Vec<usize>>,
    },
    /// Every term of the vector pairs its Clifford exponent with the column
    /// parity of its Grassmann exponent.
    BasisSupport {
        mu: Vec<usize>,
        tableau: Vec<Vec<usize>>,
    },
    /// The vectors of the weight space are linearly independent and match
    /// the counted dimension.
    BasisRank { mu: Vec<usize> },
    /// h_i acts on the vector with eigenvalue μ_i − p/2.
    BasisCartan {
        mu: Vec<usize>,
        tableau: Vec<Vec<usize>>,
        i: usize,
    },
    /// The symmetrized-word construction agrees with the restricted-filling
    /// expansion.
    BasisRoutes {
        mu: Vec<usize>,
        tableau: Vec<Vec<usize>>,
    },
}

impl Check {
    /// One-line human description of the identity instance.
    pub fn describe(&self) -> String {
        fn rows(r: &[Vec<usize>]) -> String {
            if r.is_empty() {
                return "[]".to_string();
            }
            let body: Vec<String> = r
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            format!("[{}]", body.join("/"))
        }

        match self {
            Check::Triple {
                rel,
                j,
                k,
                l,
                gamma,
                eta,
            } => format!(
                "{} on gamma={} eta={}",
                rel.describe(*j, *k, *l),
                gamma,
                eta
            ),
            Check::Adjoint {
                i,
                v_gamma,
                v_eta,
                w_gamma,
                w_eta,
            } => format!(
                "<Th_{i} v, w> = <v, D_{i} w> on v=({}, {}), w=({}, {})",
                v_gamma, v_eta, w_gamma, w_eta
            ),
            Check::Character { mu } => format!("dimension consistency at mu={:?}", mu),
            Check::BasisDiagonal { mu, tableau } => {
                format!("unit diagonal at mu={:?}, tableau {}", mu, rows(tableau))
            }
            Check::BasisTriangular { mu, probe, vector } => format!(
                "triangular zero at mu={:?}, probe {} vs vector {}",
                mu,
                rows(probe),
                rows(vector)
            ),
            Check::BasisSupport { mu, tableau } => {
                format!("term support at mu={:?}, tableau {}", mu, rows(tableau))
            }
            Check::BasisRank { mu } => format!("full rank at mu={:?}", mu),
            Check::BasisCartan { mu, tableau, i } => format!(
                "cartan eigenvalue h_{} at mu={:?}, tableau {}",
                i,
                mu,
                rows(tableau)
            ),
            Check::BasisRoutes { mu, tableau } => format!(
                "construction routes at mu={:?}, tableau {}",
                mu,
                rows(tableau)
            ),
        }
    }
}

/// A failed check with both evaluated sides rendered.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub check: Check,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of replaying a single check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl CheckOutcome {
    fn of<L: ToString, R: ToString>(pass: bool, lhs: L, rhs: R) -> Self {
        Self {
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Result of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub m: usize,
    pub p: usize,
    pub max_degree: Option<usize>,
    pub total_checks: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct SuiteRun {
    started: Instant,
    total: u64,
    failures: Vec<Failure>,
}

impl SuiteRun {
    fn new() -> Self {
        Self {
            started: Instant::now(),
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, check: Check, outcome: &CheckOutcome) {
        self.total += 1;
        if !outcome.pass {
            self.failures.push(Failure {
                check,
                lhs: outcome.lhs.clone(),
                rhs: outcome.rhs.clone(),
            });
        }
    }

    fn finish(
        self,
        suite: &str,
        m: usize,
        p: usize,
        max_degree: Option<usize>,
    ) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            m,
            p,
            max_degree,
            total_checks: self.total,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Builds the ambient, enforcing the exhaustive-enumeration guard.
fn guarded_space(m: usize, p: usize, capacity_bits: usize) -> Result<Space> {
    let space = Space::new(m, p)?;
    let bits = space.state_bits();
    if bits > capacity_bits {
        return Err(Error::capacity(format!(
            "state space of 2^{} monomials exceeds the guard of 2^{} (override via capacity bits)",
            bits, capacity_bits
        )));
    }
    if bits >= 63 {
        return Err(Error::capacity(format!(
            "state space of 2^{} monomials cannot be enumerated",
            bits
        )));
    }
    Ok(space)
}

fn zero_op(space: Space) -> LinearOperator {
    LinearOperator::new(space.m(), space.p(), move |x| {
        AlgebraElement::zero(x.m(), x.p()).expect("ambient validated")
    })
}

fn scaled(op: &LinearOperator, factor: i64) -> LinearOperator {
    op.scale(BigRational::from_integer(factor.into()))
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Left- and right-hand operators of one triple relation.
fn triple_ops(
    space: Space,
    rel: TripleRel,
    j: usize,
    k: usize,
    l: usize,
) -> Result<(LinearOperator, LinearOperator)> {
    let th = |i: usize| space.theta_op(i);
    let dd = |i: usize| space.dirac_op(i);
    let ops = match rel {
        TripleRel::Dtt => (
            dd(j)?.commutator(&th(k)?).commutator(&th(l)?),
            scaled(&th(k)?, -2 * delta(j, l)),
        ),
        TripleRel::Ddt => (
            dd(j)?.commutator(&dd(k)?).commutator(&th(l)?),
            scaled(&dd(j)?, 2 * delta(k, l)).sub(&scaled(&dd(k)?, 2 * delta(j, l))),
        ),
        TripleRel::Ddd => (
            dd(j)?.commutator(&dd(k)?).commutator(&dd(l)?),
            zero_op(space),
        ),
        TripleRel::Dtd => (
            dd(j)?.commutator(&th(k)?).commutator(&dd(l)?),
            scaled(&dd(j)?, 2 * delta(k, l)),
        ),
        TripleRel::Ttd => (
            th(j)?.commutator(&th(k)?).commutator(&dd(l)?),
            scaled(&th(j)?, 2 * delta(k, l)).sub(&scaled(&th(k)?, 2 * delta(j, l))),
        ),
        TripleRel::Ttt => (
            th(j)?.commutator(&th(k)?).commutator(&th(l)?),
            zero_op(space),
        ),
    };
    Ok(ops)
}

fn monomial_from_bits(space: Space, gamma: &str, eta: &str) -> Result<Monomial> {
    Monomial::new(
        GrassmannExponent::from_row_major_bits(gamma, space.m(), space.p())?,
        CliffordExponent::from_bit_string(eta, space.p())?,
    )
}

fn eval_triple(
    space: Space,
    ops: &(LinearOperator, LinearOperator),
    mono: Monomial,
) -> CheckOutcome {
    let v = space.basis_element(mono);
    let lhs = ops.0.apply(&v);
    let rhs = ops.1.apply(&v);
    CheckOutcome::of(lhs == rhs, lhs, rhs)
}

fn eval_adjoint(space: Space, i: usize, v: Monomial, w: Monomial) -> Result<CheckOutcome> {
    let tv = space.theta_op(i)?.apply(&space.basis_element(v));
    let dw = space.dirac_op(i)?.apply(&space.basis_element(w));
    let lhs = tv.inner_product(&space.basis_element(w))?;
    let rhs = space.basis_element(v).inner_product(&dw)?;
    Ok(CheckOutcome::of(lhs == rhs, lhs, rhs))
}

fn eval_character(m: usize, p: usize, mu: &Weight) -> Result<CheckOutcome> {
    let rank = crate::basis::span_rank(m, p, mu)?;
    let kostka_sum: usize = partitions_of(mu.total(), m, p)
        .iter()
        .map(|shape| kostka(shape, mu))
        .sum();
    let count = enumerate_ssyt(mu, Some(p)).len();
    let supported = mu.counts().iter().all(|&c| c <= p);
    let pass = rank == kostka_sum && kostka_sum == count && (count > 0) == supported;
    Ok(CheckOutcome::of(
        pass,
        format!("span_rank={}", rank),
        format!(
            "kostka_sum={}, tableau_count={}, weight_supported={}",
            kostka_sum, count, supported
        ),
    ))
}

fn eval_basis_diagonal(entry: &BasisEntry) -> CheckOutcome {
    let got = entry.omega.coeff(&entry.leading.monomial());
    CheckOutcome::of(got.is_one(), got, BigRational::one())
}

fn eval_basis_triangular(probe: &BasisEntry, vector: &BasisEntry) -> CheckOutcome {
    let got = vector.omega.coeff(&probe.leading.monomial());
    CheckOutcome::of(got.is_zero(), got, BigRational::zero())
}

fn eval_basis_support(entry: &BasisEntry) -> CheckOutcome {
    let bad = entry
        .omega
        .terms()
        .find(|(mono, _)| mono.eta != mono.gamma.column_parity());
    match bad {
        None => CheckOutcome::of(true, "all terms match", "column parity"),
        Some((mono, _)) => CheckOutcome::of(
            false,
            format!("term {} has eta {}", mono, mono.eta.to_bit_string()),
            format!(
                "column parity {}",
                mono.gamma.column_parity().to_bit_string()
            ),
        ),
    }
}

fn eval_basis_rank(entries: &[BasisEntry], mu: &Weight, p: usize) -> CheckOutcome {
    let vectors: Vec<AlgebraElement> = entries.iter().map(|e| e.omega.clone()).collect();
    let rank = elements_rank(&vectors);
    let dim = weight_space_dim(mu, p);
    CheckOutcome::of(
        rank == entries.len() && rank == dim,
        format!("rank={}", rank),
        format!("vectors={}, dimension={}", entries.len(), dim),
    )
}

fn eval_basis_cartan(space: Space, entry: &BasisEntry, i: usize) -> Result<CheckOutcome> {
    let h = space.cartan_h(i)?;
    let got = h.apply(&entry.omega);
    let eigenvalue = BigRational::new(
        (2 * entry.weight.count(i) as i64 - space.p() as i64).into(),
        2.into(),
    );
    let want = entry.omega.scale(&eigenvalue);
    Ok(CheckOutcome::of(
        got == want,
        got,
        format!("({}) * omega", eigenvalue),
    ))
}

fn eval_basis_routes(space: Space, tableau: &Tableau) -> Result<CheckOutcome> {
    let by_def = omega_via_definition(space, tableau)?;
    let by_exp = omega_via_restricted(space, tableau)?;
    Ok(CheckOutcome::of(
        by_def.value == by_exp.value,
        by_def.value,
        by_exp.value,
    ))
}

/// Applies the six triple relations to every basis monomial for all index
/// triples (j, k, l).
pub fn verify_triple_relations(
    m: usize,
    p: usize,
    capacity_bits: usize,
) -> Result<VerificationReport> {
    let space = guarded_space(m, p, capacity_bits)?;
    let mut run = SuiteRun::new();
    for rel in TripleRel::ALL {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=m {
                    let ops = triple_ops(space, rel, j, k, l)?;
                    for mono in space.basis_monomials() {
                        let outcome = eval_triple(space, &ops, mono);
                        run.record(
                            Check::Triple {
                                rel,
                                j,
                                k,
                                l,
                                gamma: mono.gamma.to_row_major_bits(),
                                eta: mono.eta.to_bit_string(),
                            },
                            &outcome,
                        );
                    }
                }
            }
        }
    }
    Ok(run.finish("relations", m, p, None))
}

/// Checks ⟨Θ_i v, w⟩ = ⟨v, D_i w⟩ over all pairs of basis monomials.
pub fn verify_adjointness(m: usize, p: usize, capacity_bits: usize) -> Result<VerificationReport> {
    let space = guarded_space(m, p, capacity_bits)?;
    let monos: Vec<Monomial> = space.basis_monomials().collect();
    let mut run = SuiteRun::new();
    for i in 1..=m {
        let theta = space.theta_op(i)?;
        let dirac = space.dirac_op(i)?;
        let theta_images: Vec<AlgebraElement> = monos
            .iter()
            .map(|&v| theta.apply(&space.basis_element(v)))
            .collect();
        let dirac_images: Vec<AlgebraElement> = monos
            .iter()
            .map(|&w| dirac.apply(&space.basis_element(w)))
            .collect();
        for (vi, &v) in monos.iter().enumerate() {
            for (wi, &w) in monos.iter().enumerate() {
                // ⟨x, monomial⟩ is the coefficient of the monomial in x.
                let lhs = theta_images[vi].coeff(&w);
                let rhs = dirac_images[wi].coeff(&v);
                if lhs == rhs {
                    run.total += 1;
                } else {
                    run.record(
                        Check::Adjoint {
                            i,
                            v_gamma: v.gamma.to_row_major_bits(),
                            v_eta: v.eta.to_bit_string(),
                            w_gamma: w.gamma.to_row_major_bits(),
                            w_eta: w.eta.to_bit_string(),
                        },
                        &CheckOutcome::of(false, lhs, rhs),
                    );
                }
            }
        }
    }
    Ok(run.finish("adjointness", m, p, None))
}

/// For every weight with |μ| <= max_degree, checks that the word-span rank,
/// the Kostka sum over shapes with at most p columns, and the bounded
/// tableau count agree, and that the weight support is exactly {0..p}^m.
pub fn verify_character(m: usize, p: usize, max_degree: usize) -> Result<VerificationReport> {
    if max_degree > m * p {
        return Err(Error::invalid(format!(
            "max degree {} exceeds m*p = {}",
            max_degree,
            m * p
        )));
    }
    Space::new(m, p)?;
    let mut run = SuiteRun::new();
    for mu in weights_up_to(m, max_degree) {
        let outcome = eval_character(m, p, &mu)?;
        run.record(
            Check::Character {
                mu: mu.counts().to_vec(),
            },
            &outcome,
        );
    }
    Ok(run.finish("character", m, p, Some(max_degree)))
}

/// For every weight with |μ| <= max_degree, builds the basis and checks the
/// unit diagonal, the triangular zero pattern, the term support, linear
/// independence at full rank, the Cartan eigenvalues, and the agreement of
/// the two construction routes.
pub fn verify_basis(
    m: usize,
    p: usize,
    max_degree: usize,
    capacity_bits: usize,
) -> Result<VerificationReport> {
    let space = guarded_space(m, p, capacity_bits)?;
    let mut run = SuiteRun::new();
    for mu in weights_up_to(m, max_degree) {
        let mu_vec = mu.counts().to_vec();
        let basis = build_basis(m, p, &mu)?;
        for (r, probe) in basis.entries.iter().enumerate() {
            run.record(
                Check::BasisDiagonal {
                    mu: mu_vec.clone(),
                    tableau: probe.tableau.rows().to_vec(),
                },
                &eval_basis_diagonal(probe),
            );
            for vector in &basis.entries[r + 1..] {
                run.record(
                    Check::BasisTriangular {
                        mu: mu_vec.clone(),
                        probe: probe.tableau.rows().to_vec(),
                        vector: vector.tableau.rows().to_vec(),
                    },
                    &eval_basis_triangular(probe, vector),
                );
            }
            run.record(
                Check::BasisSupport {
                    mu: mu_vec.clone(),
                    tableau: probe.tableau.rows().to_vec(),
                },
                &eval_basis_support(probe),
            );
            for i in 1..=m {
                run.record(
                    Check::BasisCartan {
                        mu: mu_vec.clone(),
                        tableau: probe.tableau.rows().to_vec(),
                        i,
                    },
                    &eval_basis_cartan(space, probe, i)?,
                );
            }
            run.record(
                Check::BasisRoutes {
                    mu: mu_vec.clone(),
                    tableau: probe.tableau.rows().to_vec(),
                },
                &eval_basis_routes(space, &probe.tableau)?,
            );
        }
        run.record(
            Check::BasisRank { mu: mu_vec },
            &eval_basis_rank(&basis.entries, &mu, p),
        );
    }
    Ok(run.finish("basis", m, p, Some(max_degree)))
}

/// Re-evaluates a single check from scratch at the given ambient.
pub fn replay(m: usize, p: usize, check: &Check) -> Result<CheckOutcome> {
    let space = Space::new(m, p)?;
    match check {
        Check::Triple {
            rel,
            j,
            k,
            l,
            gamma,
            eta,
        } => {
            let ops = triple_ops(space, *rel, *j, *k, *l)?;
            let mono = monomial_from_bits(space, gamma, eta)?;
            Ok(eval_triple(space, &ops, mono))
        }
        Check::Adjoint {
            i,
            v_gamma,
            v_eta,
            w_gamma,
            w_eta,
        } => {
            let v = monomial_from_bits(space, v_gamma, v_eta)?;
            let w = monomial_from_bits(space, w_gamma, w_eta)?;
            eval_adjoint(space, *i, v, w)
        }
        Check::Character { mu } => eval_character(m, p, &Weight::new(mu.clone())),
        Check::BasisDiagonal { mu, tableau } => {
            let entry = single_entry(m, p, mu, tableau)?;
            Ok(eval_basis_diagonal(&entry))
        }
        Check::BasisTriangular { mu, probe, vector } => {
            let probe = single_entry(m, p, mu, probe)?;
            let vector = single_entry(m, p, mu, vector)?;
            Ok(eval_basis_triangular(&probe, &vector))
        }
        Check::BasisSupport { mu, tableau } => {
            let entry = single_entry(m, p, mu, tableau)?;
            Ok(eval_basis_support(&entry))
        }
        Check::BasisRank { mu } => {
            let mu = Weight::new(mu.clone());
            let basis = build_basis(m, p, &mu)?;
            Ok(eval_basis_rank(&basis.entries, &mu, p))
        }
        Check::BasisCartan { mu, tableau, i } => {
            let entry = single_entry(m, p, mu, tableau)?;
            eval_basis_cartan(space, &entry, *i)
        }
        Check::BasisRoutes { tableau, .. } => {
            eval_basis_routes(space, &Tableau::new(tableau.clone())?)
        }
    }
}

fn single_entry(m: usize, p: usize, mu: &[usize], rows: &[Vec<usize>]) -> Result<BasisEntry> {
    let tableau = Tableau::new(rows.to_vec())?;
    let expected = Weight::new(mu.to_vec());
    let omega = omega_via_restricted(Space::new(m, p)?, &tableau)?;
    if omega.weight != expected {
        return Err(Error::invalid(format!(
            "tableau {} has weight {}, check claims {}",
            tableau, omega.weight, expected
        )));
    }
    let leading = crate::basis::leading_monomial(&tableau, m, p)?;
    Ok(BasisEntry {
        tableau,
        weight: omega.weight,
        leading,
        omega: omega.value,
    })
}
