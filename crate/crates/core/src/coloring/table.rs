//! Stage-2 dispatch table for the six-color construction.
//!
//! A dangerous leaf `w` is joined to a chosen vertex `v` of its component by a
//! so far uncolored edge. The key is
//!
//! * the case: 1 (`w` in the last first-level subtree, `v` in another one),
//!   2 (both in the last subtree), 3 (`w` in an earlier subtree and `v` in one of
//!   the earlier subtrees), 4 (`w` in an earlier subtree, `v` in the last one);
//! * `h(w) mod 3`;
//! * `h(v) - h(w)`;
//! * whether the leg `e_v` was recolored by an earlier step.
//!
//! The action colors `wv`, possibly recolors the leg `e_w`, and names the three
//! paths to D for `w` and, if `v` is not yet safe, for `v`.

/// Shape of a path from `x` to D; `y` is the other end of the new edge and
/// `t(.)` is the foot of a vertex's leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// `x, t(x)`
    Leg,
    /// `x, p(x), t(p(x))`
    Up,
    /// `x, p(x), p(p(x)), t(p(p(x)))`
    UpUp,
    /// `x, c, t(c)` for the first child `c` of `x`
    Down,
    /// `x, y, t(y)`
    ViaOther,
    /// `x, y, p(y), t(p(y))`
    ViaOtherUp,
}

use Route::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Action {
    /// Color of the new edge `wv`.
    pub edge: u32,
    /// New color of the leg `e_w`, if it changes.
    pub recolor: Option<u32>,
    pub w_routes: [Route; 3],
    /// Paths for `v` when it is not yet safe; `None` where `v` must already be
    /// safe.
    pub v_routes: Option<[Route; 3]>,
}

/// `(case, h(w) mod 3, h(v) - h(w), e_v recolored (None: either), action)`
pub type Row = (u8, u8, i8, Option<bool>, Action);

const VO: [Route; 3] = [Leg, Up, ViaOther];
const VOU: [Route; 3] = [Leg, Up, ViaOtherUp];
const UUVO: [Route; 3] = [Leg, UpUp, ViaOther];

const fn act(edge: u32, recolor: Option<u32>, w_routes: [Route; 3], v_routes: Option<[Route; 3]>) -> Action {
    Action {
        edge,
        recolor,
        w_routes,
        v_routes,
    }
}

const N: Option<bool> = Some(false);
const Y: Option<bool> = Some(true);
const ANY: Option<bool> = None;

#[rustfmt::skip]
pub const ROWS: &[Row] = &[
    (1, 0, 0, N, act(5, None, VOU, Some(VOU))),
    (1, 0, 1, N, act(5, None, UUVO, Some(UUVO))),
    (1, 1, 0, N, act(6, None, VO, Some(VO))),
    (1, 1, 1, N, act(4, Some(6), VO, Some(VO))),
    (1, 2, 0, N, act(2, Some(4), VOU, Some(VO))),
    (1, 2, 1, N, act(5, None, VO, Some(VO))),

    (2, 0, -1, ANY, act(5, None, VOU, None)),
    (2, 0, 0, N, act(6, Some(5), VO, Some(VO))),
    (2, 0, 0, Y, act(6, None, VO, None)),
    (2, 0, 1, N, act(6, None, VO, Some(VOU))),
    (2, 1, -1, ANY, act(6, None, VOU, None)),
    (2, 1, 0, N, act(4, Some(6), VO, Some(VO))),
    (2, 1, 0, Y, act(4, None, VO, None)),
    (2, 1, 1, N, act(4, None, VO, Some(VOU))),
    (2, 2, -1, ANY, act(4, None, VOU, None)),
    (2, 2, 0, N, act(5, Some(4), VO, Some(VO))),
    (2, 2, 0, Y, act(5, None, VO, None)),
    (2, 2, 1, N, act(5, None, VO, Some(VOU))),

    (3, 0, -1, ANY, act(4, None, VOU, None)),
    (3, 0, 0, N, act(5, Some(4), VO, Some(VO))),
    (3, 0, 0, Y, act(5, None, VO, None)),
    (3, 0, 1, N, act(5, None, VO, Some(VOU))),
    (3, 1, -1, ANY, act(5, None, VOU, None)),
    (3, 1, 0, N, act(6, Some(5), VO, Some(VO))),
    (3, 1, 0, Y, act(6, None, VO, None)),
    (3, 1, 1, N, act(6, None, VO, Some(VOU))),
    (3, 2, -1, ANY, act(6, None, VOU, None)),
    (3, 2, 0, N, act(4, Some(6), VO, Some(VO))),
    (3, 2, 0, Y, act(4, None, VO, None)),
    (3, 2, 1, N, act(4, None, VO, Some(VOU))),

    (4, 0, -1, N, act(5, None, VO, None)),
    (4, 0, -1, Y, act(5, None, VO, None)),
    (4, 0, 0, N, act(5, None, VOU, None)),
    (4, 0, 0, Y, act(4, None, VO, None)),
    (4, 1, -1, N, act(5, None, UUVO, None)),
    (4, 1, -1, Y, act(6, None, VO, None)),
    (4, 1, 0, N, act(6, None, VO, None)),
    (4, 1, 0, Y, act(3, None, VO, None)),
    (4, 2, -1, N, act(4, Some(6), VO, None)),
    (4, 2, -1, Y, act(4, None, VO, None)),
    (4, 2, 0, N, act(3, Some(6), UUVO, None)),
    (4, 2, 0, Y, act(6, None, VO, None)),
];

pub fn lookup(case: u8, residue: u8, dh: i8, recolored: bool) -> Option<Action> {
    ROWS.iter()
        .find(|&&(c, r, d, rec, _)| c == case && r == residue && d == dh && rec.map_or(true, |x| x == recolored))
        .map(|&(.., a)| a)
}
