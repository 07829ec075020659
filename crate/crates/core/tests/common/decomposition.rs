//! Published decomposition and Cartan matrices, rows in the order of the
//! golden table files.

pub struct KnownDecomposition {
    pub group: &'static str,
    pub prime: u64,
    pub d: &'static [&'static [u64]],
    pub c: &'static [&'static [u64]],
}

pub const KNOWN: &[KnownDecomposition] = &[
    KnownDecomposition {
        group: "s3",
        prime: 2,
        d: &[&[1, 0], &[1, 0], &[0, 1]],
        c: &[&[2, 0], &[0, 1]],
    },
    KnownDecomposition {
        group: "s3",
        prime: 3,
        d: &[&[1, 0], &[0, 1], &[1, 1]],
        c: &[&[2, 1], &[1, 2]],
    },
    KnownDecomposition {
        group: "a4",
        prime: 2,
        d: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        c: &[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]],
    },
    KnownDecomposition {
        group: "a4",
        prime: 3,
        d: &[&[1, 0], &[1, 0], &[1, 0], &[0, 1]],
        c: &[&[3, 0], &[0, 1]],
    },
    KnownDecomposition {
        group: "s4",
        prime: 2,
        d: &[&[1, 0], &[1, 0], &[0, 1], &[1, 1], &[1, 1]],
        c: &[&[4, 2], &[2, 3]],
    },
    KnownDecomposition {
        group: "s4",
        prime: 3,
        d: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        c: &[&[2, 1, 0, 0], &[1, 2, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
    },
    KnownDecomposition {
        group: "sl23",
        prime: 2,
        d: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1]],
        c: &[&[4, 2, 2], &[2, 4, 2], &[2, 2, 4]],
    },
    KnownDecomposition {
        group: "sl23",
        prime: 3,
        d: &[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[0, 1, 0], &[0, 0, 1]],
        c: &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 1]],
    },
    KnownDecomposition {
        group: "a5",
        prime: 2,
        d: &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 0]],
        c: &[&[4, 2, 2, 0], &[2, 2, 1, 0], &[2, 1, 2, 0], &[0, 0, 0, 1]],
    },
    KnownDecomposition {
        group: "a5",
        prime: 3,
        d: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 1]],
        c: &[&[2, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 2]],
    },
    KnownDecomposition {
        group: "a5",
        prime: 5,
        d: &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]],
        c: &[&[2, 1, 0], &[1, 3, 0], &[0, 0, 1]],
    },
    KnownDecomposition {
        group: "psl27",
        prime: 2,
        d: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 1, 1, 0], &[1, 1, 1, 0], &[0, 0, 0, 1]],
        c: &[&[2, 1, 1, 0], &[1, 3, 2, 0], &[1, 2, 3, 0], &[0, 0, 0, 1]],
    },
    KnownDecomposition {
        group: "psl27",
        prime: 3,
        d: &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1], &[1, 0, 0, 0, 1]],
        c: &[&[2, 0, 0, 0, 1], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[1, 0, 0, 0, 2]],
    },
    KnownDecomposition {
        group: "psl27",
        prime: 7,
        d: &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 1, 0, 0], &[1, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 1, 0]],
        c: &[&[2, 0, 1, 0], &[0, 3, 1, 0], &[1, 1, 2, 0], &[0, 0, 0, 1]],
    },
];
