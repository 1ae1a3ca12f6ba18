"""Isomorph-free generation: counts, seeds, determinism, filtering."""

import pytest

from cubicsym import (
    EnumerationRangeError,
    KNOWN_COUNTS,
    canonical_form,
    catalog_graph,
    decode_graph6,
    enumerate_cubic,
    enumerate_cubic_bruteforce,
    enumerate_cubic_graph6,
    filtered_enumeration,
    irreducible_seeds,
    is_isomorphic,
)
from cubicsym.enumeration import insert_on_edges, reduce_edge, reducible_edges


def test_counts_match_bruteforce_oracle():
    for n in (4, 6, 8, 10):
        gen = enumerate_cubic_graph6(n)
        oracle = enumerate_cubic_bruteforce(n)
        assert tuple(gen) == tuple(oracle)
        assert len(gen) == KNOWN_COUNTS[n]


def test_count_at_12_matches_published_census():
    assert len(enumerate_cubic_graph6(12)) == KNOWN_COUNTS[12]


def test_count_at_14_matches_published_census():
    assert len(enumerate_cubic_graph6(14)) == KNOWN_COUNTS[14]


def test_streams_are_connected_cubic_and_canonical():
    for g in enumerate_cubic(10):
        assert g.is_cubic() and g.is_connected()
    for g6 in enumerate_cubic_graph6(10):
        # emitted strings are the canonical labelings of themselves
        assert canonical_form(decode_graph6(g6)).decode("ascii") == g6


def test_isomorph_freeness_full_check():
    for n in (8, 10, 12):
        forms = [canonical_form(g) for g in enumerate_cubic(n)]
        assert len(forms) == len(set(forms))


def test_determinism_and_jobs_invariance():
    a = enumerate_cubic_graph6(10, jobs=1)
    from cubicsym.enumeration import _LEVEL_CACHE

    _LEVEL_CACHE.clear()
    b = enumerate_cubic_graph6(10, jobs=2)
    assert a == b


def test_range_errors():
    with pytest.raises(EnumerationRangeError):
        enumerate_cubic_graph6(7)
    with pytest.raises(EnumerationRangeError):
        enumerate_cubic_graph6(2)
    with pytest.raises(EnumerationRangeError):
        enumerate_cubic_graph6(22)


# ---------------------------------------------------------------------------
# reduction / insertion machinery

def test_insert_then_reduce_round_trip():
    g = catalog_graph("k33")
    edges = g.edges()
    child = insert_on_edges(g, edges[0], edges[4])
    assert child.n == 8 and child.is_cubic()
    inserted = (6, 7)
    assert inserted in [tuple(sorted(e)) for e in child.edges()]
    back = reduce_edge(child, inserted)
    assert back == g  # labels are preserved by construction


def test_reducible_edges_of_petersen_all():
    g = catalog_graph("petersen")
    assert len(reducible_edges(g)) == 15  # triangle-free, 3-connected


def test_reduction_yields_connected_cubic(rng):
    for g in enumerate_cubic(10):
        for e in reducible_edges(g):
            h = reduce_edge(g, e)
            assert h.is_cubic() and h.is_connected()


# ---------------------------------------------------------------------------
# irreducible seeds

def test_seeds_match_oracle_irreducibles():
    for n in (6, 8, 10):
        oracle = enumerate_cubic_bruteforce(n)
        irr = tuple(
            sorted(
                g6 for g6 in oracle if not reducible_edges(decode_graph6(g6))
            )
        )
        assert irr == irreducible_seeds(n)


def test_seed_structure():
    # order 8: the two-diamond necklace; order 10: two subdivided K4s
    # joined by a bridge
    assert len(irreducible_seeds(6)) == 0
    assert len(irreducible_seeds(8)) == 1
    assert len(irreducible_seeds(10)) == 1
    g = decode_graph6(irreducible_seeds(8)[0])
    assert g.is_cubic() and g.is_connected()
    assert not reducible_edges(g)


# ---------------------------------------------------------------------------
# filtered enumeration

def test_girth5_consistent_coverage_filter_yields_petersen():
    hits = list(
        filtered_enumeration(
            10,
            ["girth=5", "consistent-girth-cycle", "every-edge-in-girth-cycle"],
        )
    )
    assert len(hits) == 1
    assert is_isomorphic(hits[0], catalog_graph("petersen"))


def test_girth4_filter_subset_of_k33_cube():
    allowed = {canonical_form(catalog_graph("k33")),
               canonical_form(catalog_graph("cube"))}
    for n in (6, 8, 10, 12):
        for g in filtered_enumeration(
            n, ["girth=4", "consistent-girth-cycle", "every-edge-in-girth-cycle"]
        ):
            assert canonical_form(g) in allowed


def test_edge_orbit_and_transitivity_predicates():
    hits = list(filtered_enumeration(8, ["vertex-transitive", "edge-orbits=2"]))
    for g in hits:
        from cubicsym import transitivity_profile

        p = transitivity_profile(g)
        assert p.vertex_transitive and p.edge_orbit_count == 2
    assert hits  # the cube-order prism and Moebius ladder land here


def test_unknown_predicate_rejected():
    with pytest.raises(ValueError):
        list(filtered_enumeration(8, ["chromatic=3"]))
