"""
Regression tests over the worked examples in fixtures/.

fixtures/manifest.json records, for every .wlp file, the expected verdict,
Hilbert function and failing degrees, plus optional extras: certificate
dimensions, witness, degree-0 assignment, determinant polynomial, quotient
passes and generator degrees.
"""

import json

import pytest

from conftest import FIXTURES
from wlpkit.cli.commands import load_spec
from wlpkit.cli.specfile import build_module
from wlpkit.wlp import TraceKind, decreasing_submodule_certificate, has_wlp

MANIFEST = json.loads((FIXTURES / "manifest.json").read_text(encoding="utf-8"))["fixtures"]


def entry_id(entry):
    return entry["file"].rsplit(".", 1)[0]


@pytest.fixture(params=MANIFEST, ids=entry_id)
def case(request):
    entry = request.param
    module = build_module(load_spec(str(FIXTURES / entry["file"])))
    return entry, module


class TestManifest:
    """Test every fixture against its recorded facts."""

    def test_every_fixture_listed(self):
        """Test the manifest and the directory list the same files."""
        listed = sorted(entry["file"] for entry in MANIFEST)
        assert listed == sorted(p.name for p in FIXTURES.glob("*.wlp"))

    def test_hilbert_function(self, case):
        """Test the Hilbert function and its shift."""
        entry, module = case
        assert module.shift == entry["hilbert"]["shift"]
        assert list(module.dims) == entry["hilbert"]["values"]

    @pytest.mark.parametrize("method", ["algorithm", "oracle"])
    def test_verdict(self, case, method):
        """Test the verdict and failing degrees with both general methods."""
        entry, module = case
        report = has_wlp(module, method, debug=False)
        assert report.verdict is entry["verdict"]
        assert [list(p) for p in report.failing_degrees] == entry["failing_degrees"]

    def test_debug_cross_check(self, case):
        """Test the algorithm agrees with the oracle on every pair."""
        entry, module = case
        assert has_wlp(module, debug=True).verdict is entry["verdict"]

    def test_certificate(self, case):
        """Test the decreasing submodule of failing fixtures."""
        entry, module = case
        if "certificate_dims" not in entry:
            pytest.skip("no certificate recorded")
        cert = decreasing_submodule_certificate(module)
        assert list(cert.dims) == entry["certificate_dims"]

    def test_witness(self, case):
        """Test the reported Lefschetz element."""
        entry, module = case
        if "witness" not in entry:
            pytest.skip("no witness recorded")
        assert has_wlp(module, debug=False).witness_text == entry["witness"]

    def test_determinant_data(self, case):
        """Test the degree-0 assignment and p(gamma)."""
        entry, module = case
        if "polynomial" not in entry:
            pytest.skip("no determinant data recorded")
        report = has_wlp(module, "determinant", debug=False)
        assert list(report.lemma1.assignment) == entry["lemma1"]
        assert str(report.polynomial) == entry["polynomial"]

    def test_quotient_passes(self, case):
        """Test the Hilbert functions of the successive quotients."""
        entry, module = case
        if "quotient_passes" not in entry:
            pytest.skip("no quotient passes recorded")
        report = has_wlp(module, "algorithm", debug=False)
        passes = [step.data["to"] for step in report.trace if step.kind is TraceKind.QUOTIENT]
        assert passes == entry["quotient_passes"]

    def test_generator_degrees(self, case):
        """Test the absolute degrees of minimal generators."""
        entry, module = case
        if "generator_degrees" not in entry:
            pytest.skip("no generator degrees recorded")
        report = has_wlp(module, debug=False)
        assert [list(g) for g in report.generator_degrees] == entry["generator_degrees"]
