"""検証結果の入れ物

validate_model と各検証スイートが共通で返す構造。
例外にせず、合否と反例（witness）を記録して積み上げる。
"""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
CONVENTION = "convention"   # 2 経路が (次数, 重み) ブロックごとの符号だけ食い違う
SKIPPED = "skipped"

# ひとつのチェックが持つ反例の上限
MAX_WITNESSES = 5


@dataclass
class CheckResult:
    name: str
    status: str = PASS
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    sampled: bool = False

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def fail(self, witness) -> None:
        self.status = FAIL
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def to_dict(self) -> dict:
        data = {"name": self.name, "status": self.status, "witnesses": list(self.witnesses)}
        if self.details:
            data["details"] = self.details
        if self.sampled:
            data["sampled"] = True
        return data


def all_ok(results: list[CheckResult]) -> bool:
    return all(r.ok for r in results)


def find(results: list[CheckResult], name: str) -> CheckResult | None:
    for r in results:
        if r.name == name:
            return r
    return None
