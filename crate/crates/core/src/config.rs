//! Work limits and defaults shared across modules.

/// Default seed used by every command when none is given. Fixed so that
/// reports and certificates are reproducible out of the box.
pub const DEFAULT_SEED: u64 = 1;

/// Resource limits for the expensive operations. All limits are inclusive
/// upper bounds except where noted.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest modulus a construction tree may be flattened to.
    pub materialize_max_modulus: u64,
    /// Largest total pair count `compute_level_sums` will enumerate.
    pub enumeration_budget: u128,
    /// Largest pair count for which a step sieve is attempted.
    pub sieve_max_primes: u64,
    /// Hard cap on the sieve upper bound while hunting for step primes.
    pub sieve_max_bound: u64,
    /// Largest q for which the cyclic oracles run exhaustively.
    pub oracle_max_q: u64,
    /// Largest diameter for the integer-side oracles.
    pub oracle_max_diameter: u64,
    /// Attempt cap for the random projection-parameter search.
    pub find_t_attempts: u32,
    /// Retry cap for the integers-to-residues pipeline.
    pub pipeline_retries: u32,
    /// Largest bit width for the integer-set window kernels.
    pub window_max_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            materialize_max_modulus: 1 << 20,
            enumeration_budget: 20_000_000,
            sieve_max_primes: 1_000_000,
            sieve_max_bound: 1 << 31,
            oracle_max_q: 26,
            oracle_max_diameter: 26,
            find_t_attempts: 1000,
            pipeline_retries: 16,
            window_max_bits: 1 << 28,
        }
    }
}
