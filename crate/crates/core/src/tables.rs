//! Published classification tables for signed patterns of length 3 and 4,
//! keyed by the row pattern as printed (bars written as minus signs).

use crate::genenum::AmbientSet;
use crate::symmetry::SymmetryMode;

/// One published row: a representative pattern and its initial counts from `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub pattern: &'static str,
    pub counts: &'static [u64],
}

/// A table of avoidance sequences (tables 1 to 4).
#[derive(Debug, Clone, Copy)]
pub struct SequenceTable {
    pub number: u8,
    pub title: &'static str,
    pub length: usize,
    pub set: AmbientSet,
    pub n_max: usize,
    pub rows: &'static [PublishedRow],
}

/// A table of class counts per pattern length (tables 5 and 6).
#[derive(Debug, Clone, Copy)]
pub struct CountTable {
    pub number: u8,
    pub title: &'static str,
    pub set: AmbientSet,
    pub mode: SymmetryMode,
    pub symmetry_classes: &'static [usize],
    /// Exact counts for lengths 1 to 4.
    pub wilf_classes: &'static [usize],
    /// Published (lower, upper) bounds for length 5.
    pub length5_bounds: (usize, usize),
    /// Depth at which length-5 sequences were compared.
    pub length5_n_max: usize,
}

const fn row(pattern: &'static str, counts: &'static [u64]) -> PublishedRow {
    PublishedRow { pattern, counts }
}

pub const TABLE_1: SequenceTable = SequenceTable {
    number: 1,
    title: "Wilf classes of B_3 (avoidance by B_n)",
    length: 3,
    set: AmbientSet::B,
    n_max: 7,
    rows: &[
        row("1,2,3", &[1, 2, 8, 47, 358, 3312, 35784, 440001]),
        row("1,-3,2", &[1, 2, 8, 47, 358, 3311, 35738, 438561]),
    ],
};

pub const TABLE_2: SequenceTable = SequenceTable {
    number: 2,
    title: "Wilf classes of B_3 (avoidance by SI_n)",
    length: 3,
    set: AmbientSet::SI,
    n_max: 10,
    rows: &[
        row("1,2,3", &[1, 2, 6, 19, 68, 256, 1032, 4341, 19154, 87604, 415868]),
        row("1,-3,2", &[1, 2, 6, 20, 74, 288, 1178, 4978, 21738, 97420, 448172]),
        row("2,3,1", &[1, 2, 6, 20, 74, 292, 1220, 5336, 24316, 114872, 560840]),
        row("-2,3,1", &[1, 2, 6, 20, 74, 291, 1207, 5215, 23362, 107960, 513236]),
        row("2,3,-1", &[1, 2, 6, 20, 75, 299, 1259, 5501, 24813, 114729, 542074]),
        row("-3,2,1", &[1, 2, 6, 20, 75, 298, 1250, 5430, 24347, 111821, 524921]),
    ],
};

pub const TABLE_3: SequenceTable = SequenceTable {
    number: 3,
    title: "Wilf classes of B_4 (avoidance by B_n)",
    length: 4,
    set: AmbientSet::B,
    n_max: 7,
    rows: &[
        row("1,2,3,4", &[1, 2, 8, 48, 383, 3798, 44811, 610354]),
        row("1,3,2,4", &[1, 2, 8, 48, 383, 3798, 44811, 610355]),
        row("1,-3,2,4", &[1, 2, 8, 48, 383, 3798, 44809, 610214]),
        row("-2,1,3,4", &[1, 2, 8, 48, 383, 3798, 44809, 610280]),
        row("-2,1,-4,3", &[1, 2, 8, 48, 383, 3798, 44810, 610268]),
        row("2,3,1,4", &[1, 2, 8, 48, 383, 3798, 44810, 610284]),
        row("-2,3,1,4", &[1, 2, 8, 48, 383, 3798, 44809, 610212]),
        row("2,-3,1,4", &[1, 2, 8, 48, 383, 3798, 44809, 610210]),
        row("2,3,-1,4", &[1, 2, 8, 48, 383, 3798, 44809, 610277]),
        row("-2,4,1,3", &[1, 2, 8, 48, 383, 3798, 44809, 610214]),
        row("-2,-4,1,3", &[1, 2, 8, 48, 383, 3798, 44808, 610144]),
        row("2,-4,-1,3", &[1, 2, 8, 48, 383, 3798, 44808, 610130]),
        row("-3,2,1,4", &[1, 2, 8, 48, 383, 3798, 44809, 610279]),
        row("3,-2,1,4", &[1, 2, 8, 48, 383, 3798, 44809, 610276]),
    ],
};

pub const TABLE_4: SequenceTable = SequenceTable {
    number: 4,
    title: "Wilf classes of B_4 (avoidance by SI_n)",
    length: 4,
    set: AmbientSet::SI,
    n_max: 10,
    rows: &[
        row("1,2,3,4", &[1, 2, 6, 20, 75, 302, 1299, 5882, 27899, 137702, 704716]),
        row("1,3,2,4", &[1, 2, 6, 20, 75, 302, 1299, 5881, 27889, 137597, 703878]),
        row("1,-3,2,4", &[1, 2, 6, 20, 76, 310, 1354, 6200, 29644, 146660, 748752]),
        row("2,-1,-4,3", &[1, 2, 6, 20, 76, 312, 1378, 6412, 31246, 157800, 822452]),
        row("-2,1,3,4", &[1, 2, 6, 20, 76, 310, 1356, 6224, 29880, 148592, 763532]),
        row("-2,1,-4,3", &[1, 2, 6, 20, 76, 312, 1378, 6412, 31246, 157800, 822448]),
        row("2,3,1,4", &[1, 2, 6, 20, 76, 310, 1358, 6254, 30202, 151494, 787398]),
        row("-2,3,1,4", &[1, 2, 6, 20, 76, 310, 1358, 6248, 30117, 150535, 778460]),
        row("2,-3,1,4", &[1, 2, 6, 20, 76, 310, 1357, 6238, 30022, 149808, 773051]),
        row("2,3,-1,4", &[1, 2, 6, 20, 76, 311, 1368, 6330, 30676, 154082, 799383]),
        row("2,4,1,3", &[1, 2, 6, 20, 76, 310, 1360, 6278, 30444, 153530, 803578]),
        row("-2,4,1,3", &[1, 2, 6, 20, 76, 311, 1370, 6359, 30994, 156998, 824015]),
        row("2,-4,1,3", &[1, 2, 6, 20, 76, 311, 1370, 6358, 30971, 156682, 820465]),
        row("-2,-4,1,3", &[1, 2, 6, 20, 76, 312, 1381, 6454, 31678, 161538, 851968]),
        row("-2,4,-1,3", &[1, 2, 6, 20, 76, 310, 1359, 6264, 30290, 152112, 791459]),
        row("2,-4,-1,3", &[1, 2, 6, 20, 76, 312, 1380, 6442, 31566, 160672, 845866]),
        row("-3,2,1,4", &[1, 2, 6, 20, 76, 311, 1367, 6318, 30560, 153147, 792385]),
        row("3,-2,1,4", &[1, 2, 6, 20, 75, 302, 1300, 5892, 27993, 138408, 709859]),
        row("-3,4,1,2", &[1, 2, 6, 20, 76, 312, 1378, 6425, 31428, 159859, 841636]),
        row("-3,-4,1,2", &[1, 2, 6, 20, 76, 312, 1382, 6476, 31924, 163898, 871838]),
        row("-3,4,-1,2", &[1, 2, 6, 20, 75, 302, 1298, 5868, 27750, 136364, 693620]),
        row("3,-4,-1,2", &[1, 2, 6, 20, 76, 312, 1380, 6452, 31704, 162232, 860414]),
        row("4,1,2,3", &[1, 2, 6, 20, 76, 311, 1368, 6338, 30797, 155505, 813216]),
        row("-4,1,2,3", &[1, 2, 6, 20, 76, 311, 1370, 6362, 31015, 157124, 823967]),
        row("4,-1,2,3", &[1, 2, 6, 20, 76, 311, 1368, 6337, 30775, 155205, 809915]),
        row("4,1,-2,3", &[1, 2, 6, 20, 76, 311, 1369, 6351, 30924, 156545, 821054]),
        row("-4,-1,2,3", &[1, 2, 6, 20, 76, 311, 1369, 6350, 30903, 156262, 817929]),
        row("-4,1,-2,3", &[1, 2, 6, 20, 76, 311, 1368, 6336, 30758, 154992, 807670]),
        row("4,2,1,3", &[1, 2, 6, 20, 76, 310, 1358, 6252, 30176, 151212, 784880]),
        row("-4,2,1,3", &[1, 2, 6, 20, 76, 311, 1370, 6359, 30977, 156715, 820350]),
        row("4,-2,1,3", &[1, 2, 6, 20, 76, 311, 1368, 6335, 30754, 155017, 808670]),
        row("4,2,-1,3", &[1, 2, 6, 20, 76, 312, 1380, 6444, 31592, 160973, 848763]),
        row("-4,-2,1,3", &[1, 2, 6, 20, 76, 312, 1380, 6443, 31573, 160722, 845999]),
        row("-4,2,-1,3", &[1, 2, 6, 20, 76, 311, 1368, 6333, 30719, 154585, 804274]),
        row("4,-2,-1,3", &[1, 2, 6, 20, 76, 311, 1369, 6347, 30866, 155873, 814600]),
        row("-4,-2,-1,3", &[1, 2, 6, 20, 76, 310, 1358, 6250, 30140, 150763, 780284]),
        row("4,2,3,1", &[1, 2, 6, 20, 75, 302, 1299, 5883, 27911, 137833, 705870]),
        row("-4,2,3,1", &[1, 2, 6, 20, 76, 312, 1379, 6435, 31510, 160378, 844431]),
        row("4,-2,3,1", &[1, 2, 6, 20, 75, 302, 1299, 5882, 27897, 137674, 704384]),
        row("-4,-2,3,1", &[1, 2, 6, 20, 76, 312, 1378, 6422, 31380, 159278, 835774]),
        row("4,3,1,2", &[1, 2, 6, 20, 76, 311, 1368, 6341, 30840, 155986, 817676]),
        row("-4,3,1,2", &[1, 2, 6, 20, 76, 312, 1380, 6449, 31661, 161742, 855816]),
        row("4,-3,1,2", &[1, 2, 6, 20, 76, 311, 1369, 6352, 30936, 156664, 821993]),
        row("4,3,-1,2", &[1, 2, 6, 20, 76, 311, 1369, 6351, 30918, 156433, 819537]),
        row("-4,-3,1,2", &[1, 2, 6, 20, 76, 312, 1382, 6472, 31872, 163336, 866840]),
        row("-4,3,-1,2", &[1, 2, 6, 20, 76, 311, 1368, 6339, 30804, 155530, 812915]),
        row("-4,3,2,1", &[1, 2, 6, 20, 76, 311, 1369, 6347, 30859, 155752, 813020]),
        row("4,-3,2,1", &[1, 2, 6, 20, 76, 310, 1358, 6254, 30200, 151468, 787094]),
        row("-4,-3,2,1", &[1, 2, 6, 20, 76, 312, 1382, 6468, 31820, 162774, 861850]),
        row("-4,3,-2,1", &[1, 2, 6, 20, 76, 310, 1360, 6274, 30374, 152658, 794576]),
    ],
};

pub const TABLE_5: CountTable = CountTable {
    number: 5,
    title: "Number of symmetry and Wilf classes (avoidance by B_n)",
    set: AmbientSet::B,
    mode: SymmetryMode::General,
    symmetry_classes: &[1, 2, 6, 40, 284],
    wilf_classes: &[1, 1, 2, 14],
    length5_bounds: (58, 137),
    length5_n_max: 8,
};

pub const TABLE_6: CountTable = CountTable {
    number: 6,
    title: "Number of symmetry and Wilf classes (avoidance by SI_n)",
    set: AmbientSet::SI,
    mode: SymmetryMode::Involutive,
    symmetry_classes: &[1, 4, 12, 78, 566],
    wilf_classes: &[1, 2, 6, 50],
    length5_bounds: (305, 405),
    length5_n_max: 9,
};

pub fn sequence_table(number: u8) -> Option<&'static SequenceTable> {
    match number {
        1 => Some(&TABLE_1),
        2 => Some(&TABLE_2),
        3 => Some(&TABLE_3),
        4 => Some(&TABLE_4),
        _ => None,
    }
}

pub fn count_table(number: u8) -> Option<&'static CountTable> {
    match number {
        5 => Some(&TABLE_5),
        6 => Some(&TABLE_6),
        _ => None,
    }
}

/// Default comparison depth for classifying length-`k` patterns in `set`.
pub fn default_n_max(set: AmbientSet, k: usize) -> usize {
    match (set, k) {
        (AmbientSet::B, k) if k <= 4 => 7,
        (AmbientSet::B, _) => 8,
        (AmbientSet::SI, k) if k <= 4 => 10,
        (AmbientSet::SI, _) => 9,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Pattern;

    #[test]
    fn rows_parse_and_have_published_depth() {
        for t in [&TABLE_1, &TABLE_2, &TABLE_3, &TABLE_4] {
            for r in t.rows {
                let p = Pattern::parse(r.pattern).unwrap();
                assert_eq!(p.len(), t.length, "{}", r.pattern);
                assert_eq!(p.text(), r.pattern);
                assert_eq!(r.counts.len(), t.n_max + 1, "{}", r.pattern);
            }
        }
        assert_eq!(TABLE_3.rows.len(), 14);
        assert_eq!(TABLE_4.rows.len(), 50);
    }
}
