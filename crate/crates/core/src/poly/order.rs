use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::ring::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(rename = "degrevlex")]
    DegRevLex,
    #[serde(rename = "deglex")]
    DegLex,
}

impl std::str::FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" | "revlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            "deglex" | "glex" => Ok(OrderKind::DegLex),
            _ => Err(format!("unknown term order {s:?}")),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::DegLex => "deglex",
        })
    }
}

/// A term order: an order kind over a ranking of the variables.
///
/// Without an explicit ranking the global index is the rank (index 0 is the
/// largest variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    /// `ranking[r]` is the variable of rank `r`.
    ranking: Option<Arc<[usize]>>,
}

impl TermOrder {
    pub fn new(kind: OrderKind) -> Self {
        TermOrder { kind, ranking: None }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    pub fn deglex() -> Self {
        Self::new(OrderKind::DegLex)
    }

    /// Use a custom variable ranking, largest first. Returns `None` unless
    /// `ranking` is a permutation of `0..ranking.len()`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= seen.len() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(TermOrder { kind, ranking: Some(ranking.into()) })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Whether within every block lower-indexed variables rank higher.
    pub fn respects_block_convention(&self, ring: &RingSpec) -> bool {
        let Some(ranking) = &self.ranking else {
            return true;
        };
        if ranking.len() != ring.nvars() {
            return false;
        }
        let mut rank_of = vec![0; ranking.len()];
        for (r, &v) in ranking.iter().enumerate() {
            rank_of[v] = r;
        }
        (0..ring.blocks())
            .all(|b| (1..ring.block_size(b)).all(|j| rank_of[ring.var(b, j - 1)] < rank_of[ring.var(b, j)]))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(a, b)),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| self.revlex_tiebreak(a, b)),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.ranking {
            None => a.exps().cmp(b.exps()),
            Some(r) => {
                for &v in r.iter() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Smaller exponent in the smallest differing variable wins.
    fn revlex_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars();
        for r in (0..n).rev() {
            let v = match &self.ranking {
                None => r,
                Some(rk) => rk[r],
            };
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl Default for TermOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.ranking.is_some() {
            write!(f, "(custom ranking)")?;
        }
        Ok(())
    }
}
