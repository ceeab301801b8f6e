//! Randomized differential trials: both chain searchers against the naive
//! oracle, over the full parameter grid the library supports in anger
//! (alphabets of 2..256 symbols, q in 1..=8, alpha in 8..=12, texts up to
//! 100k bytes). A failing trial is shrunk before it is reported.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baselines::naive_search;
use crate::pattern::CompiledPattern;
use crate::search::{search_hc, search_shc, SearchBuffer};

/// Alphabet sizes exercised by the trials.
pub const TRIAL_SIGMAS: [usize; 5] = [2, 4, 20, 64, 256];

/// One generated differential trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialCase {
    pub pattern: Vec<u8>,
    pub text: Vec<u8>,
    pub q: usize,
    pub alpha: u32,
}

/// Why a trial failed, with the (shrunk) inputs that reproduce it.
#[derive(Debug, Clone)]
pub struct TrialFailure {
    pub case: TrialCase,
    pub expected: Vec<usize>,
    pub hc: Vec<usize>,
    pub shc: Vec<usize>,
    pub detail: String,
}

/// Outcome of a selftest run.
#[derive(Debug, Clone)]
pub struct SelftestReport {
    /// Trials executed (stops at the first failure).
    pub trials_run: u64,
    pub failure: Option<TrialFailure>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs `trials` randomized trials from `seed`. Deterministic: the same seed
/// replays the same trial sequence (see [`cases`]).
pub fn run(trials: u64, seed: u64) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let case = random_case(&mut rng);
        if check_case(&case).is_some() {
            let shrunk = shrink(case);
            let failure = check_case(&shrunk).expect("shrunk case still fails");
            return SelftestReport {
                trials_run: t + 1,
                failure: Some(failure),
            };
        }
    }
    SelftestReport {
        trials_run: trials,
        failure: None,
    }
}

/// The first `count` trial inputs `run` would execute for `seed`.
pub fn cases(count: u64, seed: u64) -> Vec<TrialCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_case(&mut rng)).collect()
}

/// Checks one trial; `None` means every searcher agreed with the oracle.
pub fn check_case(case: &TrialCase) -> Option<TrialFailure> {
    let m = case.pattern.len();
    let expected: Vec<usize> = naive_search(&case.pattern, &case.text)
        .expect("trial patterns are never empty")
        .iter()
        .map(|o| o.start)
        .collect();

    let cp = CompiledPattern::compile(&case.pattern, case.q, case.alpha)
        .expect("trial parameters are always valid");
    let (hc_occ, _) = search_hc(&cp, &case.text);
    let hc: Vec<usize> = hc_occ.iter().map(|o| o.start).collect();

    let mut buffer = SearchBuffer::with_slack(&case.text, m);
    let (shc_occ, _) = search_shc(&cp, &mut buffer).expect("slack is sufficient");
    let shc: Vec<usize> = shc_occ.iter().map(|o| o.start).collect();

    let mut detail = String::new();
    if hc != expected {
        detail = "hc disagrees with the naive oracle".into();
    } else if shc != expected {
        detail = "shc disagrees with the naive oracle".into();
    } else if buffer.text() != case.text {
        detail = "shc modified the logical text region".into();
    } else {
        // re-verify reported positions byte for byte, trusting neither side
        for &start in &hc {
            if case.text.get(start..start + m) != Some(case.pattern.as_slice()) {
                detail = format!("reported occurrence at {start} does not match the text");
                break;
            }
        }
    }
    if detail.is_empty() {
        return None;
    }
    Some(TrialFailure {
        case: case.clone(),
        expected,
        hc,
        shc,
        detail,
    })
}

fn random_case(rng: &mut ChaCha8Rng) -> TrialCase {
    let sigma = TRIAL_SIGMAS[rng.random_range(0..TRIAL_SIGMAS.len())];
    let q = rng.random_range(1..=8usize);
    let m = rng.random_range(q..=128usize);
    let alpha = rng.random_range(8..=12u32);
    let n = random_text_len(rng);

    let mut text: Vec<u8> = (0..n).map(|_| rng.random_range(0..sigma) as u8).collect();
    let pattern: Vec<u8> = match rng.random_range(0..10u32) {
        // sampled from the text, so at least one occurrence exists
        0..=3 if n >= m => {
            let at = rng.random_range(0..=n - m);
            text[at..at + m].to_vec()
        }
        // near miss: sampled with one byte changed
        4..=5 if n >= m => {
            let at = rng.random_range(0..=n - m);
            let mut p = text[at..at + m].to_vec();
            let pos = rng.random_range(0..m);
            p[pos] = p[pos].wrapping_add(rng.random_range(1..sigma.max(2)) as u8);
            p
        }
        _ => (0..m).map(|_| rng.random_range(0..sigma) as u8).collect(),
    };
    if n >= m {
        for _ in 0..rng.random_range(0..3u32) {
            let at = rng.random_range(0..=n - m);
            text[at..at + m].copy_from_slice(&pattern);
        }
    }
    TrialCase {
        pattern,
        text,
        q,
        alpha,
    }
}

fn random_text_len(rng: &mut ChaCha8Rng) -> usize {
    match rng.random_range(0..10u32) {
        0 => rng.random_range(0..32),
        1..=8 => {
            let exp: f64 = rng.random_range(5.0..14.0);
            exp.exp2() as usize
        }
        _ => rng.random_range(16_384..=100_000),
    }
}

/// Trims the text of a failing case from both ends while the failure
/// persists, so the reported reproducer is small.
fn shrink(case: TrialCase) -> TrialCase {
    shrink_by(case, |c| check_case(c).is_some())
}

fn shrink_by(mut case: TrialCase, still_fails: impl Fn(&TrialCase) -> bool) -> TrialCase {
    loop {
        let mut progressed = false;
        let mut cut = case.text.len() / 2;
        while cut > 0 {
            if case.text.len() >= cut {
                let mut candidate = case.clone();
                candidate.text.truncate(case.text.len() - cut);
                if still_fails(&candidate) {
                    case = candidate;
                    progressed = true;
                    continue;
                }
                let mut candidate = case.clone();
                candidate.text.drain(..cut);
                if still_fails(&candidate) {
                    case = candidate;
                    progressed = true;
                    continue;
                }
            }
            cut /= 2;
        }
        if !progressed {
            return case;
        }
    }
}
