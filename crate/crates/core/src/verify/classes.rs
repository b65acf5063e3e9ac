//! The seven classes of certificate color-set triples that the construction
//! can produce, and the pickability predicate used to combine certificates of
//! three vertices into one rainbow tree.

use std::sync::OnceLock;

/// A set of colors from `1..=15` as a bitmask (bit `c` for color `c`).
pub type ColorSet = u16;

/// `(first path set, second, third)`; the first set is a single leg color.
pub type SetTriple = [ColorSet; 3];

pub fn color_set(colors: &[u32]) -> ColorSet {
    colors.iter().fold(0, |acc, &c| {
        assert!((1..16).contains(&c), "color {c} outside 1..=15");
        acc | (1 << c)
    })
}

/// Renders a set as its digits, e.g. `{2, 4}` as `"24"`.
pub fn set_digits(s: ColorSet) -> String {
    (1..16)
        .filter(|c| s & (1 << c) != 0)
        .map(|c| format!("{c:x}"))
        .collect()
}

/// Parses the compact notation `"1,24,35"` for `({1}, {2,4}, {3,5})`.
pub fn parse_triple(text: &str) -> SetTriple {
    let sets: Vec<ColorSet> = text
        .split(',')
        .map(|part| {
            part.trim()
                .chars()
                .fold(0, |acc, ch| acc | (1 << ch.to_digit(16).expect("hex digit")))
        })
        .collect();
    [sets[0], sets[1], sets[2]]
}

const CLASSES: [&[&str]; 7] = [
    &["1,2,3", "1,2,34", "1,2,36", "2,3,14", "2,3,15", "1,3,24", "1,3,25"],
    &[
        "1,24,35", "1,36,24", "1,36,25", "1,24,56", "1,36,45", "1,36,245", "1,24,356", "1,346,25",
    ],
    &[
        "2,36,14", "2,14,35", "2,14,56", "2,36,15", "2,36,45", "2,46,35", "2,36,145", "2,14,356",
        "2,346,15",
    ],
    &[
        "3,15,26", "3,25,16", "3,15,46", "3,25,46", "3,15,24", "3,25,14", "3,25,146", "3,15,246",
    ],
    &["4,36,15", "4,36,25", "4,36,125"],
    &["5,14,26", "5,24,16"],
    &["6,25,34", "6,15,34", "6,15,24", "6,245,13"],
];

/// Classes 0–6 of certificate color-set triples.
#[derive(Debug, Clone)]
pub struct ClassTable {
    classes: Vec<Vec<SetTriple>>,
}

impl ClassTable {
    pub fn get() -> &'static ClassTable {
        static TABLE: OnceLock<ClassTable> = OnceLock::new();
        TABLE.get_or_init(|| ClassTable {
            classes: CLASSES
                .iter()
                .map(|class| class.iter().map(|t| parse_triple(t)).collect())
                .collect(),
        })
    }

    pub fn class(&self, i: usize) -> &[SetTriple] {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Every `(class, triple)` pair.
    pub fn all(&self) -> impl Iterator<Item = (usize, SetTriple)> + '_ {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(i, ts)| ts.iter().map(move |&t| (i, t)))
    }
}

/// The class containing `t`, matching the last two sets in either order.
/// Class 0 triples are stored with the two singletons first; those are also
/// matched in either order.
pub fn class_membership(t: SetTriple) -> Option<usize> {
    ClassTable::get().all().find_map(|(i, [a, b, c])| {
        let direct = t[0] == a && ((t[1] == b && t[2] == c) || (t[1] == c && t[2] == b));
        let swapped_singletons = i == 0 && t[0] == b && t[1] == a && t[2] == c;
        (direct || swapped_singletons).then_some(i)
    })
}

fn is_singleton(s: ColorSet) -> bool {
    s.count_ones() == 1
}

/// Whether one path from each of the three vertices can be chosen so that the
/// union is rainbow, decided by conditions (C1)/(C2): the leg colors are not all
/// equal, or two later paths of distinct vertices have disjoint color sets.
/// A vertex with two single-edge paths makes the answer yes outright.
///
/// Each argument must have pairwise disjoint sets (a super-rainbow family).
pub fn pickable(cu: SetTriple, cv: SetTriple, cw: SetTriple) -> bool {
    let all = [cu, cv, cw];
    let firsts_equal = cu[0] == cv[0] && cv[0] == cw[0];
    if !firsts_equal {
        return true;
    }
    if all.iter().any(|t| t.iter().filter(|&&s| is_singleton(s)).count() >= 2) {
        return true;
    }
    for x in 0..3 {
        for y in x + 1..3 {
            for s in 1..3 {
                for t in 1..3 {
                    if all[x][s] & all[y][t] == 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Oracle for [`pickable`]: tries all 27 selections.
pub fn pickable_bruteforce(cu: SetTriple, cv: SetTriple, cw: SetTriple) -> bool {
    (0..27).any(|code| {
        let (a, b, c) = (cu[code % 3], cv[code / 3 % 3], cw[code / 9]);
        a & b == 0 && a & c == 0 && b & c == 0
    })
}
