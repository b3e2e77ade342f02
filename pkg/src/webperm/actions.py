"""
Group actions on permutations and the Andre to up-down bijection.

* Foata-Strehl action: for a letter x, swap the two runs of larger letters
  flanking x.
* Block Foata-Strehl action: a block-level variant acting on permutations
  with no double descents, built on the bi-basic decomposition.
* Hetyei-Reiner action on min-max trees, and the bijection ``lam`` from Andre
  permutations to up-down permutations that it induces.

Everything here accepts words of distinct positive integers, not just
permutations of [n], since the cycle-wise constructions act on cycle words.
"""
from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import InvariantError, PreconditionError
from .perms import (
    Word,
    cycles,
    double_ascents,
    has_double_descent,
    high_run_bounds,
    is_andre,
    is_up_down,
    is_web,
    left_to_right_minima,
    right_to_left_minima,
    valleys,
)


# -- Foata-Strehl -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class XFactorization:
    w1: Word
    w2: Word
    x: int
    w3: Word
    w4: Word

    def word(self) -> Word:
        return self.w1 + self.w2 + (self.x,) + self.w3 + self.w4


def x_factorization(w: Sequence[int], x: int) -> XFactorization:
    """
    >>> xf = x_factorization((3, 4, 8, 5, 7, 10, 1, 6, 2, 9), 5)
    >>> xf.w2, xf.w3
    ((8,), (7, 10))
    """
    w = tuple(w)
    if x not in w:
        raise PreconditionError(f"letter {x} does not occur in {w}")
    pos = w.index(x)
    lo, hi = high_run_bounds(w, pos)
    return XFactorization(w[:lo], w[lo:pos], x, w[pos + 1:hi], w[hi:])


def fs_phi(w: Sequence[int], x: int) -> Word:
    xf = x_factorization(w, x)
    return xf.w1 + xf.w3 + (x,) + xf.w2 + xf.w4


def fs_phi_set(w: Sequence[int], letters: Iterable[int]) -> Word:
    out = tuple(w)
    for x in sorted(set(letters)):
        out = fs_phi(out, x)
    return out


# -- bi-basic decomposition and the block action ---------------------------

@dataclasses.dataclass(frozen=True)
class BiBasicDecomposition:
    alpha_blocks: tuple[Word, ...]
    least: int
    beta_blocks: tuple[Word, ...]

    def word(self) -> Word:
        out: tuple[int, ...] = ()
        for b in self.alpha_blocks:
            out += b
        out += (self.least,)
        for b in self.beta_blocks:
            out += b
        return out

    def __str__(self) -> str:
        parts = [" ".join(map(str, b)) for b in self.alpha_blocks]
        parts.append(str(self.least))
        parts += [" ".join(map(str, b)) for b in self.beta_blocks]
        return "|".join(parts)


def bi_basic(p: Sequence[int]) -> BiBasicDecomposition:
    """
    Split p around its least letter: each alpha block starts at a
    left-to-right minimum, each beta block ends at a right-to-left minimum.

    >>> str(bi_basic((3, 4, 8, 5, 7, 10, 1, 6, 2, 9)))
    '3 4 8 5 7 10|1|6 2|9'
    """
    p = tuple(p)
    if not p:
        raise PreconditionError("empty word")
    m = p.index(min(p))
    starts = left_to_right_minima(p)[:-1]
    ends = right_to_left_minima(p)[1:]
    alphas = tuple(p[a:b] for a, b in zip(starts, starts[1:] + [m]))
    betas = tuple(p[a + 1:b + 1] for a, b in zip([m] + ends[:-1], ends))
    d = BiBasicDecomposition(alphas, p[m], betas)
    if d.word() != p:
        raise InvariantError("bi-basic blocks do not recover the word")
    return d


def block_valleys(p: Sequence[int]) -> set[int]:
    """V(p): valleys of p other than its least letter."""
    lo = min(p)
    return {p[i] for i in valleys(p) if p[i] != lo}


def _twisted_block(p: Word, start: int, block: Word) -> Word:
    """Apply FS at the double ascents of p lying in the block, then reverse."""
    da = {p[i] for i in double_ascents(p) if start <= i < start + len(block)}
    return fs_phi_set(block, da)[::-1]


def _block_start(p: Word, d: BiBasicDecomposition, kind: str, idx: int) -> int:
    if kind == "alpha":
        return sum(len(b) for b in d.alpha_blocks[:idx])
    return sum(len(b) for b in d.alpha_blocks) + 1 + sum(len(b) for b in d.beta_blocks[:idx])


def bfs_psi(p: Sequence[int], x: int) -> Word:
    """The block Foata-Strehl involution psi_x on a word with no double descents."""
    p = tuple(p)
    if has_double_descent(p):
        raise PreconditionError(f"{p} has a double descent")
    if x not in p:
        raise PreconditionError(f"letter {x} does not occur in {p}")
    d = bi_basic(p)
    alphas, betas = list(d.alpha_blocks), list(d.beta_blocks)

    for i, blk in enumerate(alphas):
        if blk[0] == x:
            new = _twisted_block(p, _block_start(p, d, "alpha", i), blk)
            del alphas[i]
            # x joins the right-to-left minima: keep beta last letters increasing
            pos = sum(1 for b in betas if b[-1] < x)
            betas.insert(pos, new)
            return BiBasicDecomposition(tuple(alphas), d.least, tuple(betas)).word()

    for i, blk in enumerate(betas):
        if blk[-1] == x and len(blk) >= 2:
            new = _twisted_block(p, _block_start(p, d, "beta", i), blk)
            del betas[i]
            # x joins the left-to-right minima: keep alpha first letters decreasing
            pos = sum(1 for a in alphas if a[0] > x)
            alphas.insert(pos, new)
            return BiBasicDecomposition(tuple(alphas), d.least, tuple(betas)).word()

    if x in block_valleys(p):
        return fs_phi(p, x)
    return p


def bfs_psi_set(p: Sequence[int], letters: Iterable[int]) -> Word:
    out = tuple(p)
    for x in sorted(set(letters)):
        out = bfs_psi(out, x)
    return out


def bfs_orbit(p: Sequence[int]) -> frozenset[Word]:
    p = tuple(p)
    seen = {p}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        for x in q:
            r = bfs_psi(q, x)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return frozenset(seen)


def is_star_shaped(p: Sequence[int]) -> bool:
    """Least letter first, and every beta block minus its last letter is Andre."""
    d = bi_basic(p)
    return not d.alpha_blocks and all(is_andre(b[:-1]) for b in d.beta_blocks)


def orbit_representative(p: Sequence[int]) -> Word:
    cands = [q for q in bfs_orbit(p) if is_star_shaped(q)]
    if len(cands) != 1:
        raise InvariantError(f"orbit of {tuple(p)} has {len(cands)} representatives")
    return cands[0]


def c_map(d: BiBasicDecomposition | Sequence[int]) -> Word:
    """
    Send 1 b_1 ... b_l (no alpha blocks) to the permutation of [n-1] whose
    cycles are the beta blocks with every letter lowered by one.
    """
    if not isinstance(d, BiBasicDecomposition):
        d = bi_basic(d)
    if d.alpha_blocks or d.least != 1:
        raise PreconditionError("c_map needs a word of the form 1 b_1 ... b_l")
    n = len(d.word())
    if sorted(d.word()) != list(range(1, n + 1)):
        raise PreconditionError("c_map needs a permutation")
    tau = list(range(1, n))
    for blk in d.beta_blocks:
        c = [v - 1 for v in blk]
        for a, b in zip(c, c[1:] + c[:1]):
            tau[a - 1] = b
    return tuple(tau)


# -- min-max trees and the Hetyei-Reiner action ----------------------------

@dataclasses.dataclass(frozen=True)
class Node:
    label: int
    left: Optional["Node"] = None
    right: Optional["Node"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


MinMaxTree = Optional[Node]


def min_max_tree(w: Sequence[int]) -> MinMaxTree:
    """Root at the earliest letter that is the min or the max; recurse on both sides."""
    w = tuple(w)
    if len(set(w)) != len(w):
        raise PreconditionError("letters must be distinct")
    if not w:
        return None
    lo, hi = min(w), max(w)
    j = next(i for i, v in enumerate(w) if v == lo or v == hi)
    return Node(w[j], min_max_tree(w[:j]), min_max_tree(w[j + 1:]))


def inorder(t: MinMaxTree) -> Word:
    if t is None:
        return ()
    return inorder(t.left) + (t.label,) + inorder(t.right)


def size(t: MinMaxTree) -> int:
    return 0 if t is None else 1 + size(t.left) + size(t.right)


def nodes_with_children(t: MinMaxTree, k: int) -> int:
    """Number of nodes with exactly k children."""
    if t is None:
        return 0
    here = (t.left is not None) + (t.right is not None)
    return (here == k) + nodes_with_children(t.left, k) + nodes_with_children(t.right, k)


def is_increasing(t: MinMaxTree) -> bool:
    """Every node is smaller than all of its descendants."""
    if t is None:
        return True
    kids = [c for c in (t.left, t.right) if c is not None]
    return all(t.label < min(inorder(c)) and is_increasing(c) for c in kids)


def interior_positions(t: MinMaxTree) -> set[int]:
    """1-based inorder positions of the interior nodes."""
    out: set[int] = set()

    def walk(node: MinMaxTree, offset: int) -> None:
        if node is None:
            return
        ls = size(node.left)
        if not node.is_leaf:
            out.add(offset + ls + 1)
        walk(node.left, offset)
        walk(node.right, offset + ls + 1)

    walk(t, 0)
    return out


def _relabel(t: MinMaxTree, labels: Iterable[int]) -> MinMaxTree:
    """Same shape, labels assigned in inorder."""
    it = iter(labels)

    def rec(node: MinMaxTree) -> MinMaxTree:
        if node is None:
            return None
        left = rec(node.left)
        label = next(it)
        return Node(label, left, rec(node.right))

    return rec(t)


def _flip(node: Node) -> Node:
    if node.is_leaf:
        return node
    right = inorder(node.right)
    values = (node.label,) + right
    everything = values + inorder(node.left)
    if node.label == min(everything):
        new_root = max(values)
    elif node.label == max(everything):
        new_root = min(values)
    else:
        raise InvariantError("interior node is neither a min node nor a max node")
    rest = sorted(set(values) - {new_root})
    order = sorted(range(len(right)), key=lambda r: right[r])
    new_right = [0] * len(right)
    for rank, r in enumerate(order):
        new_right[r] = rest[rank]
    return Node(new_root, node.left, _relabel(node.right, new_right))


def hr_phi(t: MinMaxTree, i: int) -> MinMaxTree:
    """Hetyei-Reiner involution at the node in inorder position i (1-based)."""
    n = size(t)
    if not 1 <= i <= n:
        raise PreconditionError(f"position {i} out of range 1..{n}")

    def rec(node: Node, i: int) -> Node:
        ls = size(node.left)
        if i <= ls:
            return Node(node.label, rec(node.left, i), node.right)
        if i == ls + 1:
            return _flip(node)
        return Node(node.label, node.left, rec(node.right, i - ls - 1))

    return rec(t, i)


def hr_phi_set(t: MinMaxTree, positions: Iterable[int]) -> MinMaxTree:
    for i in sorted(set(positions)):
        t = hr_phi(t, i)
    return t


def hr_phi_word(w: Sequence[int], i: int) -> Word:
    return inorder(hr_phi(min_max_tree(w), i))


# -- the bijection between Andre and up-down words -------------------------

def _max_labelled_interior(t: MinMaxTree) -> set[int]:
    # nodes are labelled min, max, min, ... along the word, so "max" = even position
    return {i for i in interior_positions(t) if i % 2 == 0}


def lam(w: Sequence[int]) -> Word:
    """
    Andre word to up-down word with the same first letter.

    >>> lam((5, 1, 3, 6, 7, 2, 4, 8))
    (5, 8, 2, 6, 4, 7, 1, 3)
    """
    if not is_andre(w):
        raise PreconditionError(f"{tuple(w)} is not an Andre permutation")
    t = min_max_tree(w)
    return inorder(hr_phi_set(t, _max_labelled_interior(t)))


def lam_inv(w: Sequence[int]) -> Word:
    if not is_up_down(w):
        raise PreconditionError(f"{tuple(w)} is not up-down")
    t = min_max_tree(w)
    return inorder(hr_phi_set(t, _max_labelled_interior(t)))


def lam_web(p: Sequence[int]) -> Word:
    """Apply ``lam`` to every canonical cycle word of a web permutation."""
    p = tuple(p)
    if not is_web(p):
        raise PreconditionError(f"{p} is not a web permutation")
    out = list(range(1, len(p) + 1))
    for c in cycles(p):
        new = lam(c)
        for a, b in zip(new, new[1:] + new[:1]):
            out[a - 1] = b
    return tuple(out)
