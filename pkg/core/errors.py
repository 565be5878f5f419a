"""例外クラス定義

エンジン全体で使う例外の階層。
CLI は exit_code を見て終了コードを決める。
"""


class NecklaceError(Exception):
    """すべてのエンジン例外の基底クラス"""

    exit_code = 1

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class D2NonZero(NecklaceError):
    """微分の2乗が0にならない"""


class ShapeMismatch(NecklaceError):
    """行列ブロックの形が合わない"""


class LengthMismatch(NecklaceError):
    """置換と次数列の長さが一致しない"""


class NonPositiveDegreeGenerator(NecklaceError):
    """次数 ≤ 0 の生成元（単連結レジーム違反）"""

    exit_code = 3


class SpanFailure(NecklaceError):
    """PBW 像が R_n を張らない（符号規約バグ）"""


class RegimeViolation(NecklaceError):
    """モデルのレジームが要求と合わない"""

    exit_code = 3


class NotNilpotent(NecklaceError):
    """下降中心列が宣言された上限までに消えない"""

    exit_code = 2


class LInfinityRelationsFail(NecklaceError):
    """L∞ 関係式（CE 微分の2乗 = 0）が成り立たない"""

    exit_code = 2


class DegeneratePairing(NecklaceError):
    """ペアリングが退化している"""

    exit_code = 2


class NonZeroSupertrace(NecklaceError):
    """Todd 形式の超トレースが 0 でない"""


class UnknownModel(NecklaceError):
    """カタログに無いモデル名"""

    exit_code = 4


class ModelParseError(NecklaceError):
    """モデルファイルの構文エラー"""

    exit_code = 2


class ModelValidationError(NecklaceError):
    """モデルファイルが公理を満たさない"""

    exit_code = 2


class HomologySolveError(NecklaceError):
    """チェーンレベルの結果をホモロジー基底で表せない"""


class UsageError(NecklaceError):
    """コマンドラインの使い方の誤り"""

    exit_code = 4
