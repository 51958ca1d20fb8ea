//! Text and JSON formats: the canonical profile file format, matching JSON,
//! and the JSON reports emitted by the CLI.
//!
//! Profile text format (canonical):
//!
//! ```text
//! line 1:        n
//! lines 2..n+1:  man i's list as n space-separated woman indices (1-based)
//! lines n+2..2n+1: woman i's list as n space-separated man indices
//! ```
//!
//! `#` starts a comment (to end of line); blank lines are ignored. Agent
//! indices are 1-based in all text IO and 0-based in the library.

use matchmanip_core::{AgentId, BlockingPair, Matching, PreferenceList, Profile, Side};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Parse failure, pointing at the offending 1-based line.
#[derive(Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses the canonical profile text format.
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new(); // (line number, raw entries)
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut entries = Vec::new();
        for tok in content.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("expected an integer, found {tok:?}")))?;
            entries.push(v);
        }
        rows.push((line_no, entries));
    }

    let (first_line, header) = rows.first().ok_or_else(|| err(last_line.max(1), "empty file"))?;
    if header.len() != 1 {
        return Err(err(*first_line, "the first line must contain only n"));
    }
    let n = header[0];
    if n == 0 {
        return Err(err(*first_line, "n must be at least 1"));
    }
    if rows.len() != 1 + 2 * n {
        let line = rows.last().map(|r| r.0).unwrap_or(*first_line);
        return Err(err(
            line,
            format!("expected {} preference lines after n={n}, found {}", 2 * n, rows.len() - 1),
        ));
    }

    let mut lists = Vec::with_capacity(2 * n);
    for (slot, (line_no, entries)) in rows[1..].iter().enumerate() {
        let owner = if slot < n { AgentId::man(slot) } else { AgentId::woman(slot - n) };
        if entries.len() != n {
            return Err(err(
                *line_no,
                format!("list of {owner} has {} entries, expected {n}", entries.len()),
            ));
        }
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &v in entries {
            if v == 0 || v > n {
                return Err(err(
                    *line_no,
                    format!("index {v} out of range 1..={n} in list of {owner}"),
                ));
            }
            if seen[v - 1] {
                return Err(err(
                    *line_no,
                    format!("list of {owner} is not a permutation: index {v} repeats"),
                ));
            }
            seen[v - 1] = true;
            order.push(v - 1);
        }
        let list = PreferenceList::from_indices(owner, &order)
            .map_err(|e| err(*line_no, e.to_string()))?;
        lists.push(list);
    }
    let women = lists.split_off(n);
    Profile::new(lists, women).map_err(|e| err(*first_line, e.to_string()))
}

/// Writes the canonical profile text format, byte-stable for a given profile.
pub fn write_profile(profile: &Profile) -> String {
    let n = profile.n();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for side in [Side::Man, Side::Woman] {
        for i in 0..n {
            let list = profile.list(AgentId { side, index: i });
            let row: Vec<String> =
                list.order().iter().map(|a| (a.index + 1).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// JSON schemas
// ---------------------------------------------------------------------------

/// `{"pairs": [[1,3],[2,4],...]}` with 1-based indices, man ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub pairs: Vec<(usize, usize)>,
}

impl MatchingJson {
    pub fn from_matching(matching: &Matching) -> MatchingJson {
        MatchingJson { pairs: matching.pairs().map(|(m, w)| (m + 1, w + 1)).collect() }
    }

    pub fn to_matching(&self) -> Result<Matching, String> {
        let n = self.pairs.len();
        let mut man_to_woman = vec![usize::MAX; n];
        for &(m, w) in &self.pairs {
            if m == 0 || m > n || w == 0 || w > n || man_to_woman[m - 1] != usize::MAX {
                return Err("pairs do not form a perfect matching".into());
            }
            man_to_woman[m - 1] = w - 1;
        }
        Matching::from_man_to_woman(man_to_woman).map_err(|e| e.to_string())
    }
}

fn blocking_labels(blocking: &[BlockingPair]) -> Vec<(String, String)> {
    blocking.iter().map(|b| (b.man.to_string(), b.woman.to_string())).collect()
}

/// Report printed by `matchmanip da`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DaReportJson {
    pub n: usize,
    pub matching: MatchingJson,
    pub stable: bool,
    pub blocking: Vec<(String, String)>,
    /// Proposals made during the run, as `["m1 -> w3", ...]` in order.
    pub proposals: Vec<String>,
}

impl DaReportJson {
    pub fn new(profile: &Profile) -> DaReportJson {
        let (mu, log) = matchmanip_core::deferred_acceptance(profile);
        let blocking = matchmanip_core::blocking_pairs(profile, &mu);
        DaReportJson {
            n: profile.n(),
            matching: MatchingJson::from_matching(&mu),
            stable: blocking.is_empty(),
            blocking: blocking_labels(&blocking),
            proposals: log
                .proposals()
                .iter()
                .map(|&(m, w)| format!("{} -> {}", AgentId::man(m), AgentId::woman(w)))
                .collect(),
        }
    }
}

/// Report printed by `matchmanip manipulate`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManipulateReportJson {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub man: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub woman: Option<String>,
    pub improved: bool,
    /// Submitted lists as label strings, e.g. `"w2 w4 w1 w3 w5"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_man: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_woman: Option<String>,
    /// For push-up modes: the promoted women.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pushed: Option<Vec<String>>,
    pub matching: MatchingJson,
    /// Beneficiary's rank improvement where a single beneficiary exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_delta: Option<i64>,
    /// Per-woman rank improvements (old − new), indexed by woman.
    pub women_deltas: Vec<i64>,
    pub no_regret: bool,
    pub stable: bool,
    pub blocking: Vec<(String, String)>,
    /// Inconspicuousness of each submitted list.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconspicuous_man: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconspicuous_woman: Option<bool>,
}

impl ManipulateReportJson {
    pub fn blocking_from(profile: &Profile, matching: &Matching) -> Vec<(String, String)> {
        blocking_labels(&matchmanip_core::blocking_pairs(profile, matching))
    }
}

/// Report printed by `matchmanip oracle`: the fast answer, the brute-force
/// answer, and whether they agree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReportJson {
    pub mode: String,
    pub agree: bool,
    pub fast: OracleSideJson,
    pub oracle: OracleSideJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleSideJson {
    /// Beneficiary's achieved true rank (self/accomplice/pair modes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Push-up set size (min-pushup mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_size: Option<usize>,
    pub matching: MatchingJson,
}
