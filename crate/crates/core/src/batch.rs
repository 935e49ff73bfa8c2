//! Order-preserving batch evaluation.
//!
//! The randomized suites and the `verify --random` command evaluate the
//! same independent check over hundreds of pairs. With the default
//! `parallel` feature the batch fans out on rayon; without it the same
//! API runs sequentially. Results always come back indexed like the
//! input, so callers stay deterministic either way.

use crate::bezout::{self, BezoutError, BezoutPair, GcdReport};
use crate::rational::Rational;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `op` to every item, preserving input order.
#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], op: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(op).collect()
}

/// Applies `op` to every item, preserving input order.
#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], op: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(op).collect()
}

/// One pair plus the sample points at which to spot-check the resultant
/// action.
#[derive(Debug, Clone)]
pub struct IdentityJob {
    pub pair: BezoutPair,
    pub points: Vec<Rational>,
}

/// Results of the three identity checks for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub resultant_action: bool,
    pub congruence: bool,
    pub block_factorization: bool,
}

impl IdentityOutcome {
    pub fn all_hold(&self) -> bool {
        self.resultant_action && self.congruence && self.block_factorization
    }
}

/// Runs the three identity checks for one job. The block factorization
/// precondition (`deg f = n`) surfaces as an error, not a failure.
pub fn check_identities(job: &IdentityJob) -> Result<IdentityOutcome, BezoutError> {
    let resultant_action = job
        .points
        .iter()
        .all(|z| bezout::verify_resultant_action(&job.pair, z));
    let congruence = bezout::verify_congruence(&job.pair);
    let block_factorization = bezout::verify_block_factorization(&job.pair)?;
    Ok(IdentityOutcome {
        resultant_action,
        congruence,
        block_factorization,
    })
}

/// Identity checks over a whole batch, merged by index.
pub fn check_identity_batch(jobs: &[IdentityJob]) -> Vec<Result<IdentityOutcome, BezoutError>> {
    map(jobs, check_identities)
}

/// Full reports over a whole batch, merged by index.
pub fn gcd_report_batch(pairs: &[BezoutPair]) -> Vec<Result<GcdReport, BezoutError>> {
    map(pairs, bezout::gcd_report)
}
