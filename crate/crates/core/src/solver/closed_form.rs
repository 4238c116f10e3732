use super::{GameValue, Player};
use crate::graph::PathKind;

/// Known game values of `P'_n` and `P''_n` (both kinds agree).
///
/// D-start: `⌈n/2⌉ - 1` when `n ≡ 3 (mod 4)`, else `⌈n/2⌉`.
/// S-start: `⌈n/2⌉ + 1` when `n ≡ 2 (mod 4)`, else `⌈n/2⌉`.
///
/// Reference values for tests; the solver never consults them.
pub fn closed_form_p_value(_kind: PathKind, n: usize, first: Player) -> GameValue {
    let half = n.div_ceil(2) as u32;
    let value = match (first, n % 4) {
        (Player::Dominator, 3) => half - 1,
        (Player::Staller, 2) => half + 1,
        _ => half,
    };
    GameValue(value)
}
