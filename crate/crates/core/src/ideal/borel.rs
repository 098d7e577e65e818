use super::MonomialIdeal;

/// Whether `binom(c, d)` is nonzero in characteristic `p` (0 for char 0),
/// by Lucas' theorem: every base-`p` digit of `d` is at most that of `c`.
pub fn binomial_nonzero_mod(c: u64, d: u64, p: u64) -> bool {
    if d > c {
        return false;
    }
    if p == 0 {
        return true;
    }
    let (mut c, mut d) = (c, d);
    while d > 0 {
        if d % p > c % p {
            return false;
        }
        c /= p;
        d /= p;
    }
    true
}

pub(super) fn is_borel_fixed(ideal: &MonomialIdeal, p: u64) -> bool {
    let ring = ideal.ring();
    for g in ideal.gens() {
        for v in g.support() {
            let id = ring.var_id(v);
            let c = g.exp(v);
            for k in 0..id.index {
                let target = ring.var(id.block, k);
                for d in 1..=c {
                    if !binomial_nonzero_mod(c as u64, d as u64, p) {
                        continue;
                    }
                    let moved = g.with_exp(v, c - d).with_exp(target, g.exp(target) + d);
                    if !ideal.contains(&moved) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
