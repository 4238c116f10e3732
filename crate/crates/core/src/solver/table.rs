//! Transposition tables keyed by `(dominated, mover, pass_available)`.
//!
//! The graph is fixed for the lifetime of a table, so the key fully
//! determines the game value. Entries are bounds on that value, exact once
//! they meet. Small graphs index a flat array directly; larger ones fall back
//! to a hash map.

use rustc_hash::FxHashMap;

use super::{Player, SearchKey};

/// Largest order that gets a flat table (`2^(order + 3)` bytes at most).
pub const DENSE_MAX_ORDER: usize = 22;

/// `lo ≤ value ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Bounds {
    pub lo: u8,
    pub hi: u8,
}

impl Bounds {
    pub(crate) fn exact(v: u8) -> Bounds {
        Bounds { lo: v, hi: v }
    }

    /// Packed as `lo | (hi + 1) << 8`, never zero.
    fn pack(self) -> u16 {
        self.lo as u16 | (self.hi as u16 + 1) << 8
    }

    fn unpack(slot: u16) -> Option<Bounds> {
        (slot != 0).then(|| Bounds {
            lo: slot as u8,
            hi: (slot >> 8) as u8 - 1,
        })
    }
}

#[derive(Debug)]
pub(crate) enum Table {
    Dense {
        order: usize,
        /// Packed [`Bounds`], with 0 meaning unknown.
        slots: Vec<u16>,
        touched: Vec<u32>,
    },
    Sparse(FxHashMap<SearchKey, Bounds>),
}

impl Table {
    pub(crate) fn new(order: usize, with_pass: bool) -> Table {
        if order <= DENSE_MAX_ORDER {
            let bits = order + 1 + with_pass as usize;
            Table::Dense {
                order,
                slots: vec![0; 1 << bits],
                touched: Vec::new(),
            }
        } else {
            Table::Sparse(FxHashMap::default())
        }
    }

    #[inline]
    fn index(order: usize, key: SearchKey) -> usize {
        let mover = (key.mover == Player::Staller) as u64;
        let pass = key.pass_available as u64;
        (key.dominated.bits() | mover << order | pass << (order + 1)) as usize
    }

    #[inline]
    pub(crate) fn get(&self, key: SearchKey) -> Option<Bounds> {
        match self {
            Table::Dense { order, slots, .. } => Bounds::unpack(slots[Self::index(*order, key)]),
            Table::Sparse(map) => map.get(&key).copied(),
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, key: SearchKey, bounds: Bounds) {
        match self {
            Table::Dense { order, slots, touched } => {
                let i = Self::index(*order, key);
                if slots[i] == 0 {
                    touched.push(i as u32);
                }
                slots[i] = bounds.pack();
            }
            Table::Sparse(map) => {
                map.insert(key, bounds);
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            Table::Dense { touched, .. } => touched.len(),
            Table::Sparse(map) => map.len(),
        }
    }

    pub(crate) fn clear(&mut self) {
        match self {
            Table::Dense { slots, touched, .. } => {
                if touched.len() > slots.len() / 16 {
                    slots.fill(0);
                } else {
                    for &i in touched.iter() {
                        slots[i as usize] = 0;
                    }
                }
                touched.clear();
            }
            Table::Sparse(map) => map.clear(),
        }
    }

    /// Whether this table can be reused for a graph of `order` vertices.
    pub(crate) fn fits(&self, order: usize) -> bool {
        match self {
            Table::Dense { order: o, .. } => *o == order,
            Table::Sparse(_) => order > DENSE_MAX_ORDER,
        }
    }
}
