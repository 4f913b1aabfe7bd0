"""The explicit element p, its orbit p_k, the injection, and the geometry checks."""

import json

import pytest

from rank2greedy.dyck import SubsetPair, TooLargeError
from rank2greedy.greedy import RegionP
from rank2greedy.roots import NotWildError, sequences, weyl_word
from rank2greedy.verify import (
    RangeViolatedError,
    build_p,
    check_eq1,
    check_eq2,
    check_pk_positive,
    check_same_shape,
    check_support_comparison,
    mu_map,
    pk_indices,
    pk_polynomial,
)
from rank2greedy import cli


class TestBuildP:
    def test_general_case(self):
        spec = build_p(3, 2)
        assert spec.plus_indices == ((4, 3), (4, 5))
        assert spec.minus_index == (1, 1)

    def test_c1_case(self):
        spec = build_p(5, 1)
        assert spec.plus_indices == ((7, 3), (7, 4))
        assert spec.minus_index == (2, 1)

    def test_b1_case(self):
        spec = build_p(1, 5)
        assert spec.plus_indices == ((3, 7), (4, 7))
        assert spec.minus_index == (1, 2)

    def test_b1_mirrors_c1(self):
        lhs = build_p(1, 5)
        rhs = build_p(5, 1)
        assert {tuple(reversed(v)) for v in lhs.plus_indices} == set(rhs.plus_indices)
        assert tuple(reversed(lhs.minus_index)) == rhs.minus_index

    def test_tame_rejected(self):
        with pytest.raises(NotWildError):
            build_p(2, 2)


class TestPkIndices:
    @pytest.mark.parametrize("b,c", [(3, 2), (5, 1), (1, 5), (2, 3)])
    def test_k0_matches_p(self, b, c):
        spec = build_p(b, c)
        idx = pk_indices(b, c, 0)
        assert idx.algebra == (b, c)
        # the two positive components agree as a set; the beta/gamma labels
        # come from the canonical (mirrored) frame and may swap slots
        assert {idx.beta, idx.gamma} == set(spec.plus_indices)
        assert idx.alpha == spec.minus_index
        if b >= c:
            assert idx.beta == spec.plus_indices[0]
            assert idx.gamma == spec.plus_indices[1]

    def test_wild_5_1_k2(self):
        idx = pk_indices(5, 1, 2)
        assert idx.algebra == (5, 1)
        assert (idx.beta, idx.gamma, idx.alpha) == ((13, 4), (8, 3), (3, 1))

    def test_3_2_k1(self):
        idx = pk_indices(3, 2, 1)
        assert idx.algebra == (2, 3)
        assert (idx.beta, idx.gamma, idx.alpha) == ((5, 4), (3, 4), (1, 1))

    @pytest.mark.parametrize("b,c", [(3, 2), (5, 1)])
    def test_indices_match_weyl_orbit(self, b, c):
        # independent route: apply w(1;k) matrices to the k = 0 pairs
        spec = build_p(b, c)
        starts = {"beta": spec.plus_indices[0], "gamma": spec.plus_indices[1],
                  "alpha": spec.minus_index}
        for k in range(0, 8):
            idx = pk_indices(b, c, k)
            for name, start in starts.items():
                image = weyl_word(b, c, 1, k).apply(start)
                pair = getattr(idx, name)
                expected = tuple(reversed(pair)) if k % 2 else pair
                assert image == expected, (b, c, k, name)

    def test_mirrored_input(self):
        base = pk_indices(5, 1, 2)
        mirrored = pk_indices(1, 5, 2)
        assert mirrored.mirrored
        assert mirrored.algebra == tuple(reversed(base.algebra))
        assert mirrored.beta == tuple(reversed(base.beta))
        assert mirrored.alpha == tuple(reversed(base.alpha))


class TestPkPositivity:
    @pytest.mark.parametrize("b,c,k", [(3, 2, 0), (3, 2, 1), (5, 1, 0), (5, 1, 1)])
    def test_positive_small(self, b, c, k):
        report = check_pk_positive(b, c, k)
        assert report.positive
        assert report.min_coeff is not None and report.min_coeff >= 0
        assert report.support_size > 0

    def test_mirrored_report_identical(self):
        lhs = check_pk_positive(3, 2, 1)
        rhs = check_pk_positive(2, 3, 1)
        assert (lhs.min_coeff, lhs.support_size) == (rhs.min_coeff, rhs.support_size)

    def test_skip_at_cap(self):
        report = check_pk_positive(5, 1, 3, cap=10)
        assert report.skipped and not report.positive

    def test_decomposition_consistency(self):
        # the two partial checks and the full polynomial computed independently
        for b, c, k in [(3, 2, 0), (3, 2, 1), (5, 1, 0), (5, 1, 1)]:
            eq2 = check_eq2(b, c, k)
            eq1 = check_eq1(b, c, k)
            report = check_pk_positive(b, c, k)
            assert eq2 and eq1
            assert report.positive  # conjunction implies the verdict

    def test_pk_equals_sum_of_parts(self):
        from rank2greedy.greedy import greedy_element
        from rank2greedy.laurent import LaurentPoly2

        b, c, k = 3, 2, 1
        idx, poly = pk_polynomial(b, c, k)
        seq = sequences(b, c)
        ab, ac = idx.algebra
        mono = LaurentPoly2.monomial(seq.alpha(k - 2), -seq.alpha(k - 1))
        part2 = greedy_element(ab, ac, *idx.gamma).laurent - mono
        part1 = (greedy_element(ab, ac, *idx.beta).laurent + mono
                 - greedy_element(ab, ac, *idx.alpha).laurent)
        assert part1 + part2 == poly
        assert part1.min_coefficient() >= 0 and part2.min_coefficient() >= 0


class TestMuMap:
    def test_smallest_domain(self):
        report = mu_map(3, 2, 1)
        # alpha path is 1 x 1: three compatible pairs, one excluded
        assert report.algebra == (2, 3)
        assert report.domain_size == 2
        assert report.passed

    @pytest.mark.parametrize("b,c,k", [(3, 2, 1), (3, 2, 2), (3, 2, 3),
                                       (5, 1, 2), (5, 1, 3), (5, 1, 4)])
    def test_zero_failures(self, b, c, k):
        report = mu_map(b, c, k)
        assert report.passed, report

    def test_excluded_pair_is_all_verticals(self):
        from rank2greedy.dyck import DyckPath, is_compatible

        b, c, k = 3, 2, 2
        idx = pk_indices(b, c, k)
        path = DyckPath(*idx.alpha)
        excluded = SubsetPair(0, (1 << idx.alpha[1]) - 1)
        assert is_compatible(path, excluded, *idx.algebra)

    def test_size_laws_explicitly(self):
        b, c, k = 5, 1, 3
        seq = sequences(b, c)
        report = mu_map(b, c, k)
        assert report.size_violations == 0
        assert seq.beta(k - 1) - 2 * seq.alpha(k - 1) == seq.alpha(k + 1)

    def test_cap(self):
        with pytest.raises(TooLargeError):
            mu_map(5, 1, 6, cap=8)


class TestSupportComparison:
    @pytest.mark.parametrize("b,c,k", [(3, 2, 1), (3, 2, 2), (5, 1, 2), (5, 1, 3)])
    def test_inclusion(self, b, c, k):
        assert check_support_comparison(b, c, k)

    def test_corner_really_excluded(self):
        b, c, k = 3, 2, 1
        idx = pk_indices(3, 2, k)
        seq = sequences(3, 2)
        ab, ac = idx.algebra
        corner = (seq.alpha(k - 1), 0)
        beta_region = RegionP(ab, ac, *idx.beta)
        shifted = (corner[0] + seq.alpha(k + 1), corner[1] + seq.alpha(k))
        assert not beta_region.contains(*shifted)


class TestSameShape:
    @pytest.mark.parametrize("b,c,k", [(3, 2, 1), (3, 2, 2), (3, 2, 3),
                                       (5, 1, 2), (5, 1, 3), (5, 1, 4)])
    def test_in_range(self, b, c, k):
        assert check_same_shape(b, c, k)

    def test_below_range(self):
        with pytest.raises(RangeViolatedError):
            check_same_shape(5, 1, 1)
        with pytest.raises(RangeViolatedError):
            check_same_shape(3, 2, 0)


class TestCli:
    def test_dyck_word(self, capsys):
        assert cli.main(["dyck", "--a1", "4", "--a2", "3"]) == 0
        assert capsys.readouterr().out.strip() == "HHVHVHV"

    def test_support_text(self, capsys):
        code = cli.main(["support", "--b", "3", "--c", "2", "--a1", "4", "--a2", "3"])
        assert code == 0
        assert "support = region: true" in capsys.readouterr().out

    def test_p_check_json(self, capsys):
        code = cli.main(["p-check", "--b", "3", "--c", "2", "--k-max", "1",
                         "--format", "json", "--no-timings"])
        assert code == 0
        records = json.loads(capsys.readouterr().out)
        assert [r["k"] for r in records] == [0, 1]
        assert all(r["pass"] for r in records)
        assert all(r["millis"] == 0 for r in records)

    def test_identities_json(self, capsys):
        code = cli.main(["identities", "--b", "2", "--c", "3",
                         "--k-min", "-3", "--k-max", "6", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pass"] and payload["mirrored"]

    def test_cluster_vars_json(self, capsys):
        code = cli.main(["cluster-vars", "--b", "3", "--c", "2",
                         "--m-min", "0", "--m-max", "4", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert [item["m"] for item in payload] == [0, 1, 2, 3, 4]

    def test_sigma_check(self, capsys):
        code = cli.main(["sigma-check", "--b", "3", "--c", "2", "--format", "json",
                         "--no-timings"])
        assert code == 0
        records = json.loads(capsys.readouterr().out)
        assert [r["ell"] for r in records] == [1, 2]

    def test_mu_check(self, capsys):
        code = cli.main(["mu-check", "--b", "3", "--c", "2", "--k-min", "1",
                         "--k-max", "2", "--format", "json", "--no-timings"])
        assert code == 0
        records = json.loads(capsys.readouterr().out)
        assert all(r["pass"] for r in records)

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as info:
            cli.main(["p-check", "--b", "3"])
        assert info.value.code == 2

    def test_skip_exit_codes(self, capsys):
        argv = ["p-check", "--b", "5", "--c", "1", "--k-max", "3",
                "--max-edges", "10", "--format", "json"]
        assert cli.main(argv) == 0
        capsys.readouterr()
        assert cli.main(argv + ["--strict"]) == 1

    def test_svg_written(self, tmp_path, capsys):
        svg = tmp_path / "path.svg"
        assert cli.main(["dyck", "--a1", "3", "--a2", "2", "--svg", str(svg)]) == 0
        assert svg.read_text().startswith("<svg")
