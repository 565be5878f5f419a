"""pytest 共通設定: プロジェクトルートをパスに追加し、よく使うモデルを用意する"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from models.catalog import builtin  # noqa: E402
from theories.operators import Engines  # noqa: E402


@pytest.fixture
def s2():
    return builtin("sphere:2")


@pytest.fixture
def s3():
    return builtin("sphere:3")


@pytest.fixture
def cp2():
    return builtin("cpn:2")


@pytest.fixture
def s3xs3():
    return builtin("product:sphere:3,sphere:3")


@pytest.fixture
def engines_for():
    """engines_for(model, N) で Engines を作る"""

    def make(model, max_degree):
        return Engines(model, max_degree)

    return make
