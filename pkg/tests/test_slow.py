import os

import pytest

from folkman.canon import are_isomorphic
from folkman.constructions import mycielskian
from folkman.enumeration import certify_folkman_value, minimal_graph_properties
from folkman.graph import cycle

pytestmark = [
    pytest.mark.slow,
    pytest.mark.skipif(not os.environ.get("FOLKMAN_SLOW"), reason="set FOLKMAN_SLOW=1 (about 4 minutes)"),
]


def test_grotzsch_is_the_unique_minimal_graph(tmp_path):
    cert = certify_folkman_value((2, 2, 2), 3, 11, checkpoint_dir=tmp_path)
    assert cert.value == 11 and cert.class_counts[11] == 105071
    assert len(cert.minimal_witnesses) == 1
    assert are_isomorphic(cert.witness, mycielskian(cycle(5)))
    assert not minimal_graph_properties(cert).violations
