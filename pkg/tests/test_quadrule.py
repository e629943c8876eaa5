from mpmath import mp, mpc, mpf

from oscq import verify
from oscq.moments import moment
from oscq.mpfun import workprec
from oscq.quadrule import apply_rule, gauss_rule


def test_one_point_rule():
    rule = gauss_rule(1, "0.5", 192)
    with workprec(256):
        m1 = moment(1, "0.5", 256)
        assert abs(rule.nodes[0] - m1) <= mpf(2) ** -120
        assert abs(rule.weights[0] - 1) <= mpf(2) ** -120


def test_two_point_rule_nu0_hand_solved():
    rule = gauss_rule(2, 0, 192)
    with workprec(256):
        nodes = sorted(rule.nodes, key=lambda z: mpc(z).imag)
        assert abs(nodes[0] + mpc(0, 1)) <= mpf(2) ** -90
        assert abs(nodes[1] - mpc(0, 1)) <= mpf(2) ** -90
        for w in rule.weights:
            assert abs(w - mpf(1) / 2) <= mpf(2) ** -90
        # full Gaussian exactness through degree 3
        assert rule.exactness_report <= mpf(10) ** (-mpf("0.15") * 192)


def test_apply_rule_moments():
    rule = gauss_rule(2, 0, 192)
    with workprec(256):
        assert abs(apply_rule(rule, lambda x: mpf(1)) - 1) <= mpf(2) ** -90
        assert abs(apply_rule(rule, lambda x: x * x) + 1) <= mpf(2) ** -90
        # beyond the exactness degree the defect is macroscopic
        beyond = abs(apply_rule(rule, lambda x: x ** 4)
                     - moment(4, 0, 256))
        assert beyond > mpf(10) ** -5


def test_exactness_sweep_moderate():
    with workprec(256):
        for nu in ("0", "0.25", "0.5"):
            for n in (3, 6):
                rule = gauss_rule(n, nu, 256)
                assert rule.exactness_report <= \
                    mpf(10) ** (-mpf("0.15") * 256), (nu, n)


def test_node_symmetry_and_weight_conjugation():
    rule = gauss_rule(5, "0.25", 192)
    with workprec(rule.prec):
        for x, w in zip(rule.nodes, rule.weights):
            # raw-frame nodes of a real polynomial close under conjugation
            k = min(range(5), key=lambda j: abs(mp.conj(x) - rule.nodes[j]))
            assert abs(mp.conj(x) - rule.nodes[k]) <= mpf(2) ** -60
            assert abs(mp.conj(w) - rule.weights[k]) <= mpf(2) ** -60
        assert abs(mp.fsum(rule.weights) - 1) <= mpf(2) ** -60


def test_suite_quadrature_all_pass():
    records = verify.suite_quadrature(prec=256, n_list=[1, 2, 3, 4])
    failures = [r for r in records if not r.passed]
    assert not failures, failures
