//! Opt-in runtime verification of engine results.
//!
//! When enabled, every Gröbner basis is re-checked against Buchberger's criterion and every
//! minimal resolution is checked for zero compositions, minimality and agreement of its
//! Betti numbers with the Hilbert series. Outcomes are tallied in process-wide counters.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

static ENABLED: AtomicBool = AtomicBool::new(false);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Basis,
    Composition,
    Minimality,
    BettiHilbert,
}

const KINDS: usize = 4;
static PASSED: [AtomicUsize; KINDS] = [const { AtomicUsize::new(0) }; KINDS];
static FAILED: [AtomicUsize; KINDS] = [const { AtomicUsize::new(0) }; KINDS];

pub fn enable(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

pub fn is_enabled() -> bool {
    ENABLED.load(Ordering::Relaxed)
}

/// Runs `check` if verification is enabled and records its outcome.
pub fn record(kind: Check, check: impl FnOnce() -> bool) {
    if !is_enabled() {
        return;
    }
    let slot = if check() { &PASSED } else { &FAILED };
    slot[kind as usize].fetch_add(1, Ordering::Relaxed);
}

/// `(passed, failed)` for one kind of check.
pub fn counts(kind: Check) -> (usize, usize) {
    (PASSED[kind as usize].load(Ordering::Relaxed), FAILED[kind as usize].load(Ordering::Relaxed))
}

pub fn reset() {
    for i in 0..KINDS {
        PASSED[i].store(0, Ordering::Relaxed);
        FAILED[i].store(0, Ordering::Relaxed);
    }
}
