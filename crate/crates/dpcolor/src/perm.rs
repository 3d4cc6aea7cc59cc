//! The symmetric group S3 acting on the three colors `{0, 1, 2}`.
//!
//! Every arc of a signed plane graph carries an element of S3; composing,
//! inverting and applying permutations are the hot operations of the solver,
//! so all three are table lookups on a six-value enum.

use std::fmt;

/// A permutation of the color set `{0, 1, 2}`.
///
/// The discriminant doubles as an index into the lookup tables below.
/// Text form is the image word over `1..=3`: `"123"` is the identity,
/// `"213"` swaps the first two colors, `"231"` is the 3-cycle `1->2->3->1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub enum Perm {
    /// `123`: the identity ("straight" arc).
    #[default]
    Id = 0,
    /// `213`: transposition of colors 0 and 1.
    Swap01 = 1,
    /// `321`: transposition of colors 0 and 2.
    Swap02 = 2,
    /// `132`: transposition of colors 1 and 2.
    Swap12 = 3,
    /// `231`: the 3-cycle `0->1->2->0` read as images `(2,3,1)`... see table.
    Rot1 = 4,
    /// `312`: the other 3-cycle.
    Rot2 = 5,
}

/// `IMAGE[p][c]` is `p(c)` for color `c` in `{0,1,2}`.
const IMAGE: [[u8; 3]; 6] = [
    [0, 1, 2], // Id    "123"
    [1, 0, 2], // Swap01 "213"
    [2, 1, 0], // Swap02 "321"
    [0, 2, 1], // Swap12 "132"
    [1, 2, 0], // Rot1  "231": 0->1, 1->2, 2->0
    [2, 0, 1], // Rot2  "312": 0->2, 1->0, 2->1
];

/// All six permutations in discriminant order.
pub const ALL_PERMS: [Perm; 6] = [
    Perm::Id,
    Perm::Swap01,
    Perm::Swap02,
    Perm::Swap12,
    Perm::Rot1,
    Perm::Rot2,
];

/// `COMPOSE[a][b]` is the index of `a . b` (apply `b` first, then `a`).
const COMPOSE: [[u8; 6]; 6] = build_compose();

/// `INVERSE[a]` is the index of the inverse of `a`.
const INVERSE: [u8; 6] = build_inverse();

const fn perm_index(image: [u8; 3]) -> u8 {
    let mut i = 0;
    while i < 6 {
        if IMAGE[i][0] == image[0] && IMAGE[i][1] == image[1] && IMAGE[i][2] == image[2] {
            return i as u8;
        }
        i += 1;
    }
    // Unreachable for valid images; const fns cannot panic with a message pre-1.57 style.
    panic!("not a permutation image");
}

const fn build_compose() -> [[u8; 6]; 6] {
    let mut table = [[0u8; 6]; 6];
    let mut a = 0;
    while a < 6 {
        let mut b = 0;
        while b < 6 {
            let image = [
                IMAGE[a][IMAGE[b][0] as usize],
                IMAGE[a][IMAGE[b][1] as usize],
                IMAGE[a][IMAGE[b][2] as usize],
            ];
            table[a][b] = perm_index(image);
            b += 1;
        }
        a += 1;
    }
    table
}

const fn build_inverse() -> [u8; 6] {
    let mut table = [0u8; 6];
    let mut a = 0;
    while a < 6 {
        let mut image = [0u8; 3];
        let mut c = 0;
        while c < 3 {
            image[IMAGE[a][c] as usize] = c as u8;
            c += 1;
        }
        table[a] = perm_index(image);
        a += 1;
    }
    table
}

impl Perm {
    /// Applies the permutation to a color in `{0, 1, 2}`.
    #[inline]
    pub fn apply(self, color: u8) -> u8 {
        debug_assert!(color < 3);
        IMAGE[self as usize][color as usize]
    }

    /// Composition `self . other`: apply `other` first, then `self`.
    #[inline]
    pub fn compose(self, other: Perm) -> Perm {
        ALL_PERMS[COMPOSE[self as usize][other as usize] as usize]
    }

    /// The inverse permutation.
    #[inline]
    pub fn inverse(self) -> Perm {
        ALL_PERMS[INVERSE[self as usize] as usize]
    }

    /// Whether this is the identity (a "straight" arc).
    #[inline]
    pub fn is_identity(self) -> bool {
        self == Perm::Id
    }

    /// Parses an image word over `1..=3`, e.g. `"123"`, `"231"`.
    pub fn parse(word: &str) -> Option<Perm> {
        let bytes = word.as_bytes();
        if bytes.len() != 3 {
            return None;
        }
        let mut image = [0u8; 3];
        let mut seen = [false; 3];
        for (i, &b) in bytes.iter().enumerate() {
            if !(b'1'..=b'3').contains(&b) {
                return None;
            }
            let c = b - b'1';
            if seen[c as usize] {
                return None;
            }
            seen[c as usize] = true;
            image[i] = c;
        }
        ALL_PERMS.iter().copied().find(|p| {
            IMAGE[*p as usize] == image
        })
    }

    /// The image word over `1..=3` (inverse of [`Perm::parse`]).
    pub fn word(self) -> &'static str {
        match self {
            Perm::Id => "123",
            Perm::Swap01 => "213",
            Perm::Swap02 => "321",
            Perm::Swap12 => "132",
            Perm::Rot1 => "231",
            Perm::Rot2 => "312",
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_matches_pointwise_application() {
        for &a in &ALL_PERMS {
            for &b in &ALL_PERMS {
                let c = a.compose(b);
                for color in 0..3u8 {
                    assert_eq!(c.apply(color), a.apply(b.apply(color)));
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrips() {
        for &a in &ALL_PERMS {
            assert_eq!(a.compose(a.inverse()), Perm::Id);
            assert_eq!(a.inverse().compose(a), Perm::Id);
        }
    }

    #[test]
    fn words_roundtrip() {
        for &a in &ALL_PERMS {
            assert_eq!(Perm::parse(a.word()), Some(a));
        }
        assert_eq!(Perm::parse("121"), None);
        assert_eq!(Perm::parse("1234"), None);
        assert_eq!(Perm::parse("104"), None);
    }

    #[test]
    fn transpositions_are_involutions() {
        for p in [Perm::Swap01, Perm::Swap02, Perm::Swap12] {
            assert_eq!(p.compose(p), Perm::Id);
            assert_eq!(p.inverse(), p);
        }
        assert_eq!(Perm::Rot1.inverse(), Perm::Rot2);
    }
}
