"""
인스턴스 파일 (줄 단위 텍스트)

    # gmmn-instance v1
    dimension 2
    pairs 2
    seed 7                      (선택)
    provenance random n=2 ...   (선택, 줄 끝까지)
    pair -1 -1 0 0
    pair 1/2 3 5 -7/4

좌표는 정수 또는 "num/den" 토큰, '#' 로 시작하는 나머지 줄은 주석
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import FormatError
from models import Instance, Point
from geometry.rational import format_rational, parse_rational

logger = logging.getLogger(__name__)

INSTANCE_HEADER = "# gmmn-instance v1"


def dump_instance(inst: Instance) -> str:
    lines = [INSTANCE_HEADER, f"dimension {inst.d}", f"pairs {inst.n}"]
    if inst.seed is not None:
        lines.append(f"seed {inst.seed}")
    if inst.provenance:
        lines.append(f"provenance {inst.provenance}")
    for box in inst.pairs:
        t, u = box.pair
        lines.append("pair " + " ".join(format_rational(c) for c in t.coords + u.coords))
    return "\n".join(lines) + "\n"


def _records(text: str, header: str) -> List[Tuple[int, str, str]]:
    """(줄 번호, 키워드, 나머지) 목록, 첫 유효 줄은 header 여야 함"""
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), 1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines or lines[0][1] != header:
        raise FormatError(f"헤더 '{header}' 가 없음")
    records = []
    for no, line in lines[1:]:
        if line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        records.append((no, keyword, rest.strip()))
    return records


def _int_field(no: int, keyword: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise FormatError(f"{no}행: {keyword} 값이 정수가 아님: '{value}'")


def parse_instance(text: str) -> Instance:
    """텍스트 -> Instance, 터미널이 같은 쌍은 경고 후 제외"""
    d: Optional[int] = None
    declared: Optional[int] = None
    seed: Optional[int] = None
    provenance: Optional[str] = None
    pairs = []

    for no, keyword, rest in _records(text, INSTANCE_HEADER):
        if keyword == "dimension":
            d = _int_field(no, keyword, rest)
            if d < 1:
                raise FormatError(f"{no}행: 차원은 1 이상: {d}")
        elif keyword == "pairs":
            declared = _int_field(no, keyword, rest)
        elif keyword == "seed":
            seed = _int_field(no, keyword, rest)
        elif keyword == "provenance":
            provenance = rest
        elif keyword == "pair":
            if d is None:
                raise FormatError(f"{no}행: dimension 보다 pair 가 먼저 나옴")
            tokens = rest.split()
            if len(tokens) != 2 * d:
                raise FormatError(f"{no}행: 좌표 {len(tokens)}개, {2 * d}개 필요 ({d}차원)")
            coords = [parse_rational(tok) for tok in tokens]
            pairs.append((no, Point(tuple(coords[:d])), Point(tuple(coords[d:]))))
        else:
            raise FormatError(f"{no}행: 알 수 없는 레코드 '{keyword}'")

    if d is None:
        raise FormatError("dimension 레코드가 없음")
    if declared is not None and declared != len(pairs):
        raise FormatError(f"pairs {declared} 선언, 실제 {len(pairs)}개")

    for no, t, u in pairs:
        if t == u:
            logger.warning(f"{no}행: 두 터미널이 같은 쌍 {t} 제외")
    return Instance.from_pairs(d, [(t, u) for _, t, u in pairs], seed=seed, provenance=provenance)


def write_instance(inst: Instance, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dump_instance(inst))
    return path


def read_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (IOError, UnicodeDecodeError) as e:
        raise FormatError(f"인스턴스 파일 읽기 실패 {path}: {e}") from e
    return parse_instance(text)
