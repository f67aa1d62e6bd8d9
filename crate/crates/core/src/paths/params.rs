use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// `(n, t)` together with the decomposition `n = k(t+1) + d`, `0 <= d <= t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PathParams {
    pub n: u32,
    pub t: u32,
    pub k: u32,
    pub d: u32,
}

/// Which branch of the construction applies to a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `d = t - 1`: the windows split exactly into `k` blocks.
    Exact,
    /// `d < t - 1`: pad to the exact case, then project back.
    Padding,
    /// `d = t`: `k` blocks plus the last window kept as is.
    Leftover,
}

impl PathParams {
    pub fn new(n: u32, t: u32) -> Result<Self> {
        if t == 0 || t > n {
            return Err(Error::InvalidParams(format!("need 1 <= t <= n, got n={n}, t={t}")));
        }
        Ok(PathParams {
            n,
            t,
            k: n / (t + 1),
            d: n % (t + 1),
        })
    }

    pub fn branch(&self) -> Branch {
        if self.d + 1 == self.t {
            Branch::Exact
        } else if self.d == self.t {
            Branch::Leftover
        } else {
            Branch::Padding
        }
    }

    /// Number of windows `n - t + 1`.
    pub fn window_count(&self) -> u32 {
        self.n - self.t + 1
    }
}

pub fn decompose_nt(n: u32, t: u32) -> Result<PathParams> {
    PathParams::new(n, t)
}

/// The window monomial `x_start x_{start+1} ... x_{start+t-1}`.
pub fn window(start: u32, t: u32) -> Monomial {
    Monomial::square_free(start..start + t)
}

/// `I_t(L_n)`: the `n - t + 1` products of `t` consecutive variables.
pub fn path_ideal(n: u32, t: u32) -> Result<MonomialIdeal> {
    let params = PathParams::new(n, t)?;
    MonomialIdeal::new(n, (1..=params.window_count()).map(|i| window(i, t)).collect())
}

/// Closed formula for the arithmetical rank of `I_t(L_n)`:
/// `2(n-d)/(t+1)` when `d <= t-1`, and `(2n-(t-1))/(t+1)` when `d = t`.
pub fn ara_formula(n: u32, t: u32) -> Result<u32> {
    let p = PathParams::new(n, t)?;
    Ok(if p.d < p.t {
        2 * (n - p.d) / (t + 1)
    } else {
        (2 * n - (t - 1)) / (t + 1)
    })
}

/// `t + 1` consecutive windows replaced together by one block pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub index: u32,
    /// Variable shift applied to the canonical pair.
    pub offset: u32,
    /// Window start indices, `offset + 1 ..= offset + t + 1`.
    pub first_window: u32,
    pub last_window: u32,
    pub windows: Vec<Monomial>,
}

impl Block {
    /// Variables `x_{offset+1} .. x_{offset+2t}` touched by the block.
    pub fn variable_span(&self, t: u32) -> (u32, u32) {
        (self.offset + 1, self.offset + 2 * t)
    }
}

/// The grouping of windows into `k` blocks of `t + 1`. Only valid in the
/// exact branch unless `allow_partial` is set, in which case the first
/// `k(t+1)` windows are grouped and the rest is left to the caller.
pub fn blocks(params: &PathParams, allow_partial: bool) -> Result<Vec<Block>> {
    if params.branch() != Branch::Exact && !allow_partial {
        return Err(Error::InvalidParams(format!(
            "windows of n={}, t={} do not split into blocks (d={}, need d=t-1)",
            params.n, params.t, params.d
        )));
    }
    let t = params.t;
    Ok((0..params.k)
        .map(|b| {
            let offset = b * (t + 1);
            Block {
                index: b,
                offset,
                first_window: offset + 1,
                last_window: offset + t + 1,
                windows: (offset + 1..=offset + t + 1).map(|i| window(i, t)).collect(),
            }
        })
        .collect())
}

/// Windows `k(t+1)+d-t+2 ..= k(t+1)` that extend `I_t(L_n)` into fresh
/// variables so the sum is the path ideal on `n + t - 1 - d` vertices.
pub fn padding_monomials(params: &PathParams) -> Result<(MonomialIdeal, u32)> {
    if params.branch() != Branch::Padding {
        return Err(Error::InvalidParams(format!(
            "padding needs d < t-1, got n={}, t={}, d={}",
            params.n, params.t, params.d
        )));
    }
    let PathParams { t, k, d, n } = *params;
    let extended_n = n + (t - 1 - d);
    let first = k * (t + 1) + d + 2 - t;
    let last = k * (t + 1);
    let ideal = MonomialIdeal::new(extended_n, (first..=last).map(|i| window(i, t)).collect())?;
    Ok((ideal, extended_n))
}
