//! Verification suites: projector identities, purity/expectation
//! identities, bound inequalities and the entropy battery.

use std::fmt;

use concurrence_core::bounds::{
    self, entropy_checks, pure_concurrence_bipartite, pure_concurrence_multipartite,
    tighter_upper_two_qubit, universal_inverter, wootters_concurrence,
};
use concurrence_core::ensembles::random_mixed_with_purity;
use concurrence_core::linalg::{haar_random_pure, haar_random_unitary, random_mixture, stream_rng};
use concurrence_core::projectors::{
    antisym_projector, basis_sum_projector, global_projectors, pattern_product, swap_operator,
    sym_projector, two_copy_trace, Symmetry,
};
use concurrence_core::{tol, BoundsEvaluator, ComplexMatrix, DensityMatrix, Label, SystemShape};
use rand::Rng;

use crate::error::{CliError, CliResult};

/// Entrywise tolerance for exact matrix identities.
pub const MATRIX_IDENTITY_TOL: f64 = 1e-12;
/// Agreement tolerance for scalar identities evaluated on states.
pub const SCALAR_IDENTITY_TOL: f64 = 1e-9;
/// The projector suite builds `D²×D²` matrices; keep it to small systems.
pub const PROJECTOR_SUITE_MAX_DIM: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Projectors,
    Identities,
    Inequalities,
    Entropy,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Projectors => "projectors",
            Suite::Identities => "identities",
            Suite::Inequalities => "inequalities",
            Suite::Entropy => "entropy",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtMost,
    AtLeast,
}

/// First failing check, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub check: String,
    pub seed: u64,
    pub sample: Option<usize>,
    pub observed: f64,
    pub relation: Relation,
    pub expected: f64,
    pub tolerance: f64,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Equal => "=",
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        };
        write!(
            f,
            "{}: observed {:.12e}, expected {rel} {:.12e} (tolerance {:e}), seed {}",
            self.check, self.observed, self.expected, self.tolerance, self.seed
        )?;
        if let Some(i) = self.sample {
            write!(f, ", sample {i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub shape: SystemShape,
    pub samples: usize,
    pub seed: u64,
}

struct Checker {
    seed: u64,
    sample: Option<usize>,
    count: usize,
}

impl Checker {
    fn new(seed: u64) -> Self {
        Checker {
            seed,
            sample: None,
            count: 0,
        }
    }

    fn fail(
        &self,
        check: &str,
        observed: f64,
        relation: Relation,
        expected: f64,
        tolerance: f64,
    ) -> CliError {
        let failure = Failure {
            check: check.to_string(),
            seed: self.seed,
            sample: self.sample,
            observed,
            relation,
            expected,
            tolerance,
        };
        CliError::Verification(failure.to_string())
    }

    fn close(
        &mut self,
        check: &str,
        observed: f64,
        expected: f64,
        tolerance: f64,
    ) -> CliResult<()> {
        self.count += 1;
        if (observed - expected).abs() <= tolerance {
            Ok(())
        } else {
            Err(self.fail(check, observed, Relation::Equal, expected, tolerance))
        }
    }

    fn at_most(&mut self, check: &str, observed: f64, bound: f64, slack: f64) -> CliResult<()> {
        self.count += 1;
        if observed <= bound + slack {
            Ok(())
        } else {
            Err(self.fail(check, observed, Relation::AtMost, bound, slack))
        }
    }

    fn at_least(&mut self, check: &str, observed: f64, bound: f64, slack: f64) -> CliResult<()> {
        self.count += 1;
        if observed >= bound - slack {
            Ok(())
        } else {
            Err(self.fail(check, observed, Relation::AtLeast, bound, slack))
        }
    }

    /// `max |a − b|` entrywise, reported as observed against 0.
    fn matrices(&mut self, check: &str, a: &ComplexMatrix, b: &ComplexMatrix) -> CliResult<()> {
        self.close(check, a.max_abs_diff(b), 0.0, MATRIX_IDENTITY_TOL)
    }
}

/// Random mixed state used by the suites: index `i` draws, by `i mod 3`,
/// an isotropic mixture with purity uniform in `(1/D, 1]`, a Haar mixture
/// of rank `1 + (i/3 mod D)`, or a full-rank mixture of `D + 2` Haar states.
pub fn sample_state(shape: &SystemShape, seed: u64, index: usize) -> DensityMatrix {
    let mut rng = stream_rng(seed, index as u64);
    let d = shape.total_dim();
    match index % 3 {
        0 => {
            let u: f64 = rng.random();
            let min = 1.0 / d as f64;
            let mu = min + (1.0 - min) * (1.0 - u);
            random_mixed_with_purity(shape, mu, &mut rng).expect("purity inside (1/D, 1]")
        }
        1 => random_mixture(shape, 1 + (index / 3) % d, &mut rng),
        _ => random_mixture(shape, d + 2, &mut rng),
    }
}

fn nonempty_blocks(shape: &SystemShape) -> Vec<Vec<usize>> {
    let n = shape.len();
    (1..1usize << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn projectors(cfg: &Config, c: &mut Checker) -> CliResult<()> {
    let shape = &cfg.shape;
    let d = shape.total_dim();
    if d > PROJECTOR_SUITE_MAX_DIM {
        return Err(CliError::BadInput(format!(
            "projector suite supports total dimension up to {PROJECTOR_SUITE_MAX_DIM}, got {d}"
        )));
    }
    let id = ComplexMatrix::identity(d * d);
    for block in nonempty_blocks(shape) {
        let name = |what: &str| format!("{what} on block {block:?}");
        let w = swap_operator(shape, &block)?;
        let m = antisym_projector(shape, &block)?;
        let p = sym_projector(shape, &block)?;
        c.matrices(&name("W^2 = 1"), &(&w * &w), &id)?;
        c.matrices(&name("P-^2 = P-"), &(&m * &m), &m)?;
        c.matrices(&name("P+^2 = P+"), &(&p * &p), &p)?;
        c.matrices(&name("P- Hermitian"), &m.adjoint(), &m)?;
        c.matrices(
            &name("P-P+ = 0"),
            &(&m * &p),
            &ComplexMatrix::zeros(d * d, d * d),
        )?;
        c.matrices(&name("P- + P+ = 1"), &(&m + &p), &id)?;
    }

    let mut local_dims: Vec<usize> = shape.dims().to_vec();
    local_dims.sort_unstable();
    local_dims.dedup();
    for (k, &dl) in local_dims.iter().enumerate() {
        let single = SystemShape::new(vec![dl])?;
        let minus = antisym_projector(&single, &[0])?;
        let plus = sym_projector(&single, &[0])?;
        let mut rng = stream_rng(cfg.seed, k as u64);
        for (b, basis) in [
            ComplexMatrix::identity(dl),
            haar_random_unitary(dl, &mut rng),
        ]
        .iter()
        .enumerate()
        {
            let which = if b == 0 { "computational" } else { "Haar" };
            let sum_minus = basis_sum_projector(basis, Symmetry::Antisymmetric)?;
            let sum_plus = basis_sum_projector(basis, Symmetry::Symmetric)?;
            c.matrices(
                &format!("basis sum P- (d={dl}, {which} basis)"),
                &sum_minus,
                &minus,
            )?;
            c.matrices(
                &format!("basis sum P+ (d={dl}, {which} basis)"),
                &sum_plus,
                &plus,
            )?;
        }
    }

    let n = shape.len();
    let (global_plus, global_minus) = global_projectors(shape)?;
    let mut even = ComplexMatrix::zeros(d * d, d * d);
    let mut odd = ComplexMatrix::zeros(d * d, d * d);
    for mask in 0..1usize << n {
        let pattern: Vec<Symmetry> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Symmetry::Antisymmetric
                } else {
                    Symmetry::Symmetric
                }
            })
            .collect();
        let term = pattern_product(shape, &pattern)?;
        if mask.count_ones() % 2 == 0 {
            even = &even + &term;
        } else {
            odd = &odd + &term;
        }
    }
    c.matrices("global P+ = even-parity sum", &even, &global_plus)?;
    c.matrices("global P- = odd-parity sum", &odd, &global_minus)?;
    c.matrices("global P+ + P- = 1", &(&global_plus + &global_minus), &id)?;

    if n >= 2 {
        let all_plus = pattern_product(shape, &vec![Symmetry::Symmetric; n])?;
        let mut minus_minus = ComplexMatrix::zeros(d * d, d * d);
        let mut mixed = ComplexMatrix::zeros(d * d, d * d);
        for (k, kbar) in shape.bipartitions() {
            let (mk, pk) = (antisym_projector(shape, &k)?, sym_projector(shape, &k)?);
            let (mkbar, pkbar) = (
                antisym_projector(shape, &kbar)?,
                sym_projector(shape, &kbar)?,
            );
            minus_minus = &minus_minus + &(&mk * &mkbar);
            mixed = &(&mixed + &(&mk * &pkbar)) + &(&pk * &mkbar);
        }
        let rhs_minus = (&global_plus - &all_plus).scale(2f64.powi(n as i32 - 2));
        let rhs_mixed = global_minus.scale(2f64.powi(n as i32 - 1) - 1.0);
        c.matrices("sum over bipartitions of P-P-", &minus_minus, &rhs_minus)?;
        c.matrices("sum over bipartitions of P-P+ + P+P-", &mixed, &rhs_mixed)?;
    }

    let blocks: Vec<(Vec<usize>, ComplexMatrix)> = nonempty_blocks(shape)
        .into_iter()
        .map(|b| swap_operator(shape, &b).map(|w| (b, w)))
        .collect::<Result<_, _>>()?;
    for i in 0..cfg.samples {
        c.sample = Some(i);
        let rho = sample_state(shape, cfg.seed, i);
        for (block, w) in &blocks {
            let literal = two_copy_trace(rho.matrix(), w);
            let purity = rho.reduced_purity(block)?;
            c.close(
                &format!("Tr(rho x rho W{block:?}) = Tr rho_S^2"),
                literal.re,
                purity,
                SCALAR_IDENTITY_TOL,
            )?;
        }
    }
    c.sample = None;
    Ok(())
}

fn identities(cfg: &Config, c: &mut Checker) -> CliResult<()> {
    let shape = &cfg.shape;
    let n = shape.len();
    if n < 2 {
        return Err(CliError::BadInput(
            "identities need at least two subsystems".into(),
        ));
    }
    let evaluator = BoundsEvaluator::new(shape)?;
    let mix_factor = 1.0 - 2f64.powi(1 - n as i32);
    for i in 0..cfg.samples {
        c.sample = Some(i);
        let rho = sample_state(shape, cfg.seed, i);
        let mu = rho.purity();
        let mut literal = std::collections::BTreeMap::new();
        for (label, form, lit) in evaluator.compare(&rho)? {
            c.close(
                &format!("<{label}> literal vs purity form"),
                lit,
                form,
                SCALAR_IDENTITY_TOL,
            )?;
            literal.insert(label, lit);
        }
        c.close(
            "K - V offset",
            literal[&Label::K] - literal[&Label::V],
            4.0 * mix_factor * (1.0 - mu),
            SCALAR_IDENTITY_TOL,
        )?;
        if n == 2 {
            let offset = 2.0 * (1.0 - mu);
            c.close(
                "K1 - V1 offset",
                literal[&Label::K1] - literal[&Label::V1],
                offset,
                SCALAR_IDENTITY_TOL,
            )?;
            c.close(
                "K2 - V2 offset",
                literal[&Label::K2] - literal[&Label::V2],
                offset,
                SCALAR_IDENTITY_TOL,
            )?;
            let k_mean = 0.5 * (literal[&Label::K1] + literal[&Label::K2]);
            let v_mean = 0.5 * (literal[&Label::V1] + literal[&Label::V2]);
            c.close(
                "K = (K1 + K2)/2",
                literal[&Label::K],
                k_mean,
                SCALAR_IDENTITY_TOL,
            )?;
            c.close(
                "V = (V1 + V2)/2",
                literal[&Label::V],
                v_mean,
                SCALAR_IDENTITY_TOL,
            )?;
            let inverter = universal_inverter(&rho)?;
            let t = rho.matrix().trace_product(&inverter).re;
            c.close(
                "<A> = Tr(rho rho~)",
                literal[&Label::A],
                t,
                SCALAR_IDENTITY_TOL,
            )?;
            if shape.is_two_qubit() {
                let flip = tighter_upper_two_qubit(&rho)?;
                c.close(
                    "<4P-xP-> = Tr(rho rho~) (spin flip)",
                    literal[&Label::A],
                    flip,
                    SCALAR_IDENTITY_TOL,
                )?;
            }
        }

        let mut rng = stream_rng(cfg.seed ^ 0x9e37_79b9_7f4a_7c15, i as u64);
        let psi = haar_random_pure(shape, &mut rng);
        let pure = psi.density();
        let m = evaluator.multipartite(&pure)?;
        let c2 = pure_concurrence_multipartite(&psi)?.powi(2);
        c.close("pure state: <K> = C^2", m.upper_k, c2, SCALAR_IDENTITY_TOL)?;
        c.close("pure state: <V> = C^2", m.lower_v, c2, SCALAR_IDENTITY_TOL)?;
        if n == 2 {
            let b = evaluator.bipartite(&pure)?;
            let cb = pure_concurrence_bipartite(&psi)?.powi(2);
            for (name, value) in [
                ("K1", b.upper_k1),
                ("K2", b.upper_k2),
                ("V1", b.lower_v1),
                ("V2", b.lower_v2),
            ] {
                c.close(
                    &format!("pure state: <{name}> = C^2"),
                    value,
                    cb,
                    SCALAR_IDENTITY_TOL,
                )?;
            }
        }
    }
    c.sample = None;
    Ok(())
}

fn inequalities(cfg: &Config, c: &mut Checker) -> CliResult<()> {
    let shape = &cfg.shape;
    if shape.len() < 2 {
        return Err(CliError::BadInput(
            "inequalities need at least two subsystems".into(),
        ));
    }
    let slack = tol::INEQUALITY_SLACK;
    let evaluator = BoundsEvaluator::new(shape)?;
    for i in 0..cfg.samples {
        c.sample = Some(i);
        let rho = sample_state(shape, cfg.seed, i);
        let m = evaluator.multipartite(&rho)?;
        c.at_most("<V> <= <K>", m.lower_v, m.upper_k, slack)?;
        c.at_least("<K> >= 0", m.upper_k, 0.0, slack)?;
        c.at_least("<A> >= 0", m.pure_observable, 0.0, slack)?;
        if shape.len() == 2 {
            let b = evaluator.bipartite(&rho)?;
            c.at_most("<V1> <= <K1>", b.lower_v1, b.upper_k1, slack)?;
            c.at_most("<V2> <= <K2>", b.lower_v2, b.upper_k2, slack)?;
            c.at_most(
                "<A> <= min(<K1>, <K2>)",
                b.pure_observable,
                b.upper_k1.min(b.upper_k2),
                slack,
            )?;
            if shape.is_two_qubit() {
                let cw = wootters_concurrence(&rho)?;
                let c2 = cw * cw;
                let tight = tighter_upper_two_qubit(&rho)?;
                c.at_most("<V1> <= C^2", b.lower_v1, c2, slack)?;
                c.at_most("<V2> <= C^2", b.lower_v2, c2, slack)?;
                c.at_most("C^2 <= Tr(rho rho~)", c2, tight, slack)?;
                c.at_most(
                    "Tr(rho rho~) <= min(<K1>, <K2>)",
                    tight,
                    b.upper_k1.min(b.upper_k2),
                    slack,
                )?;
            }
        }
    }
    c.sample = None;
    Ok(())
}

fn entropy(cfg: &Config, c: &mut Checker) -> CliResult<()> {
    let shape = &cfg.shape;
    if shape.len() != 2 {
        return Err(CliError::BadInput(format!(
            "entropy suite needs exactly two subsystems, got {}",
            shape.len()
        )));
    }
    let slack = tol::INEQUALITY_SLACK;
    for i in 0..cfg.samples {
        c.sample = Some(i);
        let rho = sample_state(shape, cfg.seed, i);
        let e = entropy_checks(&rho)?;
        let (ab, a, b) = (e.linear_entropy, e.linear_entropy_a, e.linear_entropy_b);
        c.at_least("E(AB) >= E(B) - E(A)", ab, b - a, slack)?;
        c.at_least("E(AB) >= E(A) - E(B)", ab, a - b, slack)?;
        c.at_most("E(AB) <= E(A) + E(B)", ab, a + b, slack)?;
        c.at_least(
            "Tr(sqrt(rho) rho~ sqrt(rho)) >= 0",
            e.inverter_trace,
            0.0,
            slack,
        )?;
        c.at_least(
            "min eigenvalue of rho~",
            e.inverter_min_eigenvalue,
            0.0,
            slack,
        )?;
        let b = bounds::bipartite_bounds(&rho)?;
        c.close(
            "Tr(sqrt(rho) rho~ sqrt(rho)) = <A>",
            e.inverter_trace,
            b.pure_observable,
            SCALAR_IDENTITY_TOL,
        )?;
    }
    c.sample = None;
    Ok(())
}

/// Number of checks run by each suite.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub suite: Suite,
    pub checks: usize,
}

/// Runs `suite` (every applicable suite for [`Suite::All`]) and stops at
/// the first failing check. `All` skips the entropy suite for shapes that
/// are not bipartite and the projector suite above
/// [`PROJECTOR_SUITE_MAX_DIM`].
pub fn run(suite: Suite, cfg: &Config) -> CliResult<Vec<Outcome>> {
    let suites = match suite {
        Suite::All => {
            let mut v = Vec::new();
            if cfg.shape.total_dim() <= PROJECTOR_SUITE_MAX_DIM {
                v.push(Suite::Projectors);
            }
            v.extend([Suite::Identities, Suite::Inequalities]);
            if cfg.shape.len() == 2 {
                v.push(Suite::Entropy);
            }
            v
        }
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in suites {
        let mut c = Checker::new(cfg.seed);
        match s {
            Suite::Projectors => projectors(cfg, &mut c)?,
            Suite::Identities => identities(cfg, &mut c)?,
            Suite::Inequalities => inequalities(cfg, &mut c)?,
            Suite::Entropy => entropy(cfg, &mut c)?,
            Suite::All => unreachable!("expanded above"),
        }
        out.push(Outcome {
            suite: s,
            checks: c.count,
        });
    }
    Ok(out)
}
