//! Matchings of `{0, .., m-1}` as involutions.

use crate::poly::UPolynomial;
use crate::rational;

use super::OracleError;

/// Largest `m` accepted by [`enumerate_matchings`].
pub const MATCHING_BOUND: u32 = 14;

/// An involution; fixed points are the unmatched vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    /// Returns `None` unless `partner` is an involution.
    pub fn new(partner: Vec<usize>) -> Option<Self> {
        let ok = partner
            .iter()
            .enumerate()
            .all(|(i, &p)| p < partner.len() && partner[p] == i);
        ok.then_some(Self { partner })
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn fixed_points(&self) -> usize {
        count_fixed(&self.partner)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.partner
    }
}

fn count_fixed(partner: &[usize]) -> usize {
    partner.iter().enumerate().filter(|(i, &p)| *i == p).count()
}

/// Calls `visit` with every involution of `m` points. The smallest unused
/// point is either left fixed or paired with each larger unused point, so
/// the visiting order is deterministic.
pub fn for_each_involution<F: FnMut(&[usize])>(m: usize, mut visit: F) {
    const UNSET: usize = usize::MAX;
    fn rec<F: FnMut(&[usize])>(partner: &mut [usize], start: usize, visit: &mut F) {
        let Some(i) = (start..partner.len()).find(|&i| partner[i] == UNSET) else {
            visit(partner);
            return;
        };
        partner[i] = i;
        rec(partner, i + 1, visit);
        for j in i + 1..partner.len() {
            if partner[j] == UNSET {
                partner[i] = j;
                partner[j] = i;
                rec(partner, i + 1, visit);
                partner[j] = UNSET;
            }
        }
        partner[i] = UNSET;
    }
    let mut partner = vec![UNSET; m];
    rec(&mut partner, 0, &mut visit);
}

/// `sum u^{#fixed points}` over all matchings of `m` points.
pub fn enumerate_matchings(m: u32) -> Result<UPolynomial, OracleError> {
    if m > MATCHING_BOUND {
        return Err(OracleError::BoundExceeded { n: m, bound: MATCHING_BOUND });
    }
    let mut counts = vec![0u64; m as usize + 1];
    for_each_involution(m as usize, |p| counts[count_fixed(p)] += 1);
    Ok(UPolynomial::from_u_coeffs(
        counts.into_iter().map(|c| rational::int(c as i64)),
    ))
}
