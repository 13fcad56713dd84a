//! Word-level bit-vector kernels shared by the cyclic and integer set types.
//!
//! Everything here operates on little-endian `u64` slices: bit `i` of the
//! vector is bit `i % 64` of word `i / 64`. Callers keep the invariant that
//! bits at or beyond the declared length are zero.

pub const WORD_BITS: usize = 64;

#[inline]
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Mask selecting the low `n` bits of a word, `1 <= n <= 64`.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    debug_assert!(n >= 1 && n <= 64);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Clear any bits at positions `>= len` in the final word.
pub fn trim(words: &mut [u64], len: usize) {
    let r = len % WORD_BITS;
    if r != 0 {
        if let Some(last) = words.last_mut() {
            *last &= low_mask(r);
        }
    }
}

#[inline]
fn read_word(src: &[u64], bit: usize) -> u64 {
    let w = bit / WORD_BITS;
    let b = bit % WORD_BITS;
    let lo = src.get(w).copied().unwrap_or(0);
    if b == 0 {
        lo
    } else {
        (lo >> b) | (src.get(w + 1).copied().unwrap_or(0) << (WORD_BITS - b))
    }
}

/// OR `len` bits of `src` starting at bit `src_off` into `dst` starting at
/// bit `dst_off`. The destination must be large enough; source bits beyond
/// its logical length must be zero.
pub fn or_bit_range(dst: &mut [u64], dst_off: usize, src: &[u64], src_off: usize, len: usize) {
    let mut done = 0;
    while done < len {
        let n = (len - done).min(WORD_BITS);
        let chunk = read_word(src, src_off + done) & low_mask(n);
        let pos = dst_off + done;
        let w = pos / WORD_BITS;
        let b = pos % WORD_BITS;
        dst[w] |= chunk << b;
        if b != 0 && b + n > WORD_BITS {
            dst[w + 1] |= chunk >> (WORD_BITS - b);
        }
        done += n;
    }
}

pub fn popcount(words: &[u64]) -> u64 {
    words.iter().map(|w| w.count_ones() as u64).sum()
}

#[inline]
pub fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
pub fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

/// Iterator over the indices of set bits, ascending.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_or_range(dst: &mut Vec<bool>, dst_off: usize, src: &[bool], src_off: usize, len: usize) {
        for i in 0..len {
            if src[src_off + i] {
                dst[dst_off + i] = true;
            }
        }
    }

    fn to_words(bits: &[bool]) -> Vec<u64> {
        let mut w = vec![0u64; words_for(bits.len()).max(1)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                set_bit(&mut w, i);
            }
        }
        w
    }

    #[test]
    fn or_bit_range_matches_naive() {
        // Deterministic pseudo-random exercise across word boundaries.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let src_len = (next() % 300 + 1) as usize;
            let dst_len = (next() % 300 + src_len) as usize;
            let src: Vec<bool> = (0..src_len).map(|_| next() & 1 == 1).collect();
            let len = (next() as usize) % src_len + 1;
            let src_off = (next() as usize) % (src_len - len + 1);
            let dst_off = (next() as usize) % (dst_len - len + 1);

            let mut dst_bits = vec![false; dst_len];
            let mut dst_words = to_words(&dst_bits);
            let src_words = to_words(&src);

            naive_or_range(&mut dst_bits, dst_off, &src, src_off, len);
            or_bit_range(&mut dst_words, dst_off, &src_words, src_off, len);

            assert_eq!(to_words(&dst_bits), dst_words);
        }
    }

    #[test]
    fn iter_ones_roundtrip() {
        let mut w = vec![0u64; 3];
        for i in [0usize, 1, 63, 64, 65, 127, 128, 190] {
            set_bit(&mut w, i);
        }
        let got: Vec<usize> = iter_ones(&w).collect();
        assert_eq!(got, vec![0, 1, 63, 64, 65, 127, 128, 190]);
        assert_eq!(popcount(&w), 8);
    }
}
