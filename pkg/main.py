#!/usr/bin/env python3
"""
GMMN Approximation
터미널 쌍을 Manhattan 경로로 잇는 직교 네트워크를 근사적으로 계산하고 검증
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

import yaml

# 로깅 설정 (결과는 stdout, 로그는 stderr)
logging.basicConfig(
    format='%(asctime)s [%(levelname)s] %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S',
    level=logging.INFO
)
logger = logging.getLogger(__name__)

# 모듈 경로 설정
sys.path.insert(0, str(Path(__file__).parent))

from errors import ConfigError, DimensionMismatchError, FormatError, GmmnError
from models import Point
from geometry import approx_decimal, format_rational, network_length, parse_rational
from generators import MmnGenerator, RandomGenerator, TightGenerator, random_points
from render import SvgRenderer
from solver import ALGORITHMS, SolverConfig, solve_gmmn
from storage import read_instance, read_network_file, write_instance, write_network
from toolkit import REFERENCES, LOWER_BOUND, OracleCaps, RatioCase, ratio_report
from verifier import verify_instance

FAMILIES = ("tight", "random", "mmn")


def load_config(config_path: str = None) -> dict:
    """설정 파일 로드 (기본 경로에 파일이 없으면 빈 설정)"""
    if config_path is None:
        config_path = Path(__file__).parent / "config.yaml"
        if not config_path.exists():
            return {}

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}
    except (IOError, yaml.YAMLError) as e:
        raise ConfigError(f"설정 파일 로드 실패 {config_path}: {e}") from e

    if not isinstance(config, dict):
        raise ConfigError(f"설정 파일 최상위는 매핑이어야 함: {config_path}")
    return config


def _rational(value, name: str):
    """파라미터용 유리수 (형식 오류는 설정 오류로 취급)"""
    try:
        return parse_rational(str(value))
    except FormatError as e:
        raise ConfigError(f"{name} 값이 올바르지 않음: {value}") from e


def solver_config(config: dict, args) -> SolverConfig:
    """config.yaml 값 위에 CLI 플래그를 덮어씀"""
    cfg = SolverConfig.from_dict(config.get("solver"), config.get("steiner"))
    cfg = cfg.override(
        algorithm=getattr(args, "algo", None),
        rsa_backend=getattr(args, "rsa", None),
        rsa_strategy=getattr(args, "strategy", None),
        jobs=getattr(args, "jobs", None),
    )
    if getattr(args, "skip_check", False):
        logger.warning("자체 검증(self-check) 비활성화")
        cfg = cfg.override(self_check=False)
    return cfg


def cmd_solve(args, config: dict) -> int:
    """인스턴스 파일을 풀어 네트워크 파일 저장"""
    logger.info("[1/3] 인스턴스 로드 중...")
    inst = read_instance(args.input)
    cfg = solver_config(config, args)
    cfg.check_dimension(inst.d)
    logger.info(f"      쌍 {inst.n}개, {inst.d}차원")

    logger.info(f"[2/3] 계산 중... ({cfg.algorithm}, {cfg.rsa_backend.value}, jobs={cfg.jobs})")
    start = time.perf_counter()
    network = solve_gmmn(inst, cfg)
    elapsed = time.perf_counter() - start

    logger.info("[3/3] 네트워크 저장 중...")
    write_network(network, args.out, inst.d)
    cost = network_length(network)
    print(
        f"n={inst.n} d={inst.d} cost={format_rational(cost)} "
        f"≈{approx_decimal(cost)} (approx) runtime={elapsed:.3f}s"
    )
    return 0


def cmd_verify(args, config: dict) -> int:
    """네트워크가 모든 쌍을 M-연결하는지 검사 (feasible 이면 0, 아니면 1)"""
    inst = read_instance(args.instance)
    nf = read_network_file(args.network)
    if nf.dimension != inst.d:
        raise DimensionMismatchError(f"인스턴스 {inst.d}차원, 네트워크 {nf.dimension}차원")

    report = verify_instance(nf.network, inst)
    for line in report.to_lines():
        print(line)
    return 0 if report.feasible else 1


def _generator(args, config: dict):
    gen_config = config.get("generators", {})
    if args.family == "tight":
        tight = gen_config.get("tight", {})
        k = args.k if args.k is not None else tight.get("k", 3)
        eps = _rational(args.epsilon if args.epsilon is not None else tight.get("epsilon", "1/16"), "epsilon")
        return TightGenerator(int(k), eps)

    rnd = gen_config.get("random", {})
    seed = args.seed if args.seed is not None else rnd.get("seed", 0)
    d = args.d if args.d is not None else rnd.get("d", 2)
    lo = args.coord_min if args.coord_min is not None else rnd.get("coord_min", -32)
    hi = args.coord_max if args.coord_max is not None else rnd.get("coord_max", 32)

    if args.family == "random":
        n = args.n if args.n is not None else rnd.get("n", 16)
        return RandomGenerator(int(n), int(d), int(lo), int(hi), int(seed))

    if args.points:
        points = [Point(tuple(_rational(c, "points") for c in token.split(","))) for token in args.points]
        dims = sorted({p.d for p in points})
        if len(dims) > 1:
            raise ConfigError(f"--points 의 차원이 섞여 있음: {dims}")
    else:
        count = args.n if args.n is not None else rnd.get("n", 16)
        points = random_points(int(count), int(d), (int(lo), int(hi)), int(seed))
    return MmnGenerator(points, seed=None if args.points else int(seed))


def cmd_gen(args, config: dict) -> int:
    """인스턴스 생성 (tight 계열은 인증서 네트워크도 저장)"""
    generated = _generator(args, config).generate()
    inst = generated.instance
    write_instance(inst, args.out)
    logger.info(f"인스턴스 저장: {args.out} (쌍 {inst.n}개)")

    if generated.certificate is not None:
        out = Path(args.out)
        cert_path = args.certificate or out.with_name(out.stem + ".certificate.net")
        write_network(generated.certificate, cert_path, inst.d)
        logger.info(f"인증서 저장: {cert_path}")
        print(
            f"n={inst.n} certificate={format_rational(network_length(generated.certificate))} "
            f"normalized={format_rational(generated.normalized_length)}"
        )
    else:
        print(f"n={inst.n} d={inst.d}")
    return 0


def _ratio_cases(args, config: dict) -> List[RatioCase]:
    cases = []
    for path in args.input or []:
        cases.append(RatioCase(name=Path(path).stem, instance=read_instance(path)))
    if args.family == "tight":
        eps = _rational(args.epsilon or "1/16", "epsilon")
        for k in args.k_values:
            generated = TightGenerator(k, eps).generate()
            cases.append(RatioCase(f"tight-k{k:02d}", generated.instance, generated.certificate))
    elif args.family in ("random", "mmn"):
        for i in range(args.count):
            seed = args.seed + i
            if args.family == "random":
                inst = RandomGenerator(args.n, args.d, args.coord_min, args.coord_max, seed).generate().instance
            else:
                points = random_points(args.n, args.d, (args.coord_min, args.coord_max), seed)
                inst = MmnGenerator(points, seed=seed).generate().instance
            cases.append(RatioCase(f"{args.family}-s{seed:04d}", inst))
    if not cases:
        raise ConfigError("측정할 인스턴스가 없음 (--family 또는 --input 지정)")
    return cases


def cmd_ratio(args, config: dict) -> int:
    """(인스턴스, 알고리즘) 별 비용 / 기준값 표 출력"""
    base = solver_config(config, args)
    algorithms = [base.override(algorithm=name) for name in args.algos]
    oracle = config.get("oracle", {})
    caps = OracleCaps(
        max_pairs=int(oracle.get("max_pairs", 3)),
        max_hanan=int(oracle.get("max_hanan", 6)),
    )

    logger.info("[1/2] 인스턴스 준비 중...")
    cases = _ratio_cases(args, config)
    logger.info(f"      {len(cases)}개, 기준: {args.reference}")

    logger.info("[2/2] 측정 중...")
    report = ratio_report(cases, algorithms, args.reference, caps)
    lines = report.to_lines()
    for line in lines:
        print(line)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write("\n".join(lines) + "\n")
    return 0


def cmd_render(args, config: dict) -> int:
    """2차원 인스턴스 (와 네트워크) 를 SVG 로 저장"""
    render_config = config.get("render", {})
    renderer = SvgRenderer(
        width=int(render_config.get("width", 800)),
        margin=_rational(render_config.get("margin", "1/20"), "render.margin"),
    )
    inst = read_instance(args.instance)
    network = None
    if args.network:
        nf = read_network_file(args.network)
        if nf.dimension != inst.d:
            raise DimensionMismatchError(f"인스턴스 {inst.d}차원, 네트워크 {nf.dimension}차원")
        network = nf.network
    separators = [_rational(s, "separator") for s in args.separator] if args.separator else None
    renderer.write(args.out, inst, network, separators)
    logger.info(f"SVG 저장: {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="GMMN Approximation")
    parser.add_argument("--config", "-c", help="설정 파일 경로")
    parser.add_argument("--verbose", "-v", action="store_true", help="상세 출력 (DEBUG)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="인스턴스 풀기")
    solve.add_argument("input", help="인스턴스 파일")
    solve.add_argument("--out", "-o", required=True, help="네트워크 파일 저장 경로")
    solve.add_argument("--algo", choices=ALGORITHMS, help="알고리즘")
    solve.add_argument("--rsa", choices=("mst", "exact-small"), help="Steiner 트리 백엔드")
    solve.add_argument("--strategy", choices=("all-orthant", "per-orthant"), help="RSA 전략")
    solve.add_argument("--jobs", "-j", type=int, help="병렬 작업 수")
    solve.add_argument("--skip-check", action="store_true", help="출력 자체 검증 생략")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="네트워크 검증")
    verify.add_argument("instance", help="인스턴스 파일")
    verify.add_argument("network", help="네트워크 파일")
    verify.set_defaults(handler=cmd_verify)

    gen = sub.add_parser("gen", help="인스턴스 생성")
    gen.add_argument("--family", choices=FAMILIES, required=True, help="생성기 계열")
    gen.add_argument("--out", "-o", required=True, help="인스턴스 파일 저장 경로")
    gen.add_argument("--certificate", help="tight 인증서 저장 경로 (기본: <out>.certificate.net)")
    gen.add_argument("--k", type=int, help="tight: 쌍 개수 2^k - 1")
    gen.add_argument("--epsilon", help="tight: ε (예: 1/16)")
    gen.add_argument("--n", type=int, help="random: 쌍 개수 / mmn: 점 개수")
    gen.add_argument("--d", type=int, help="차원")
    gen.add_argument("--coord-min", type=int, help="좌표 최솟값")
    gen.add_argument("--coord-max", type=int, help="좌표 최댓값")
    gen.add_argument("--seed", type=int, help="난수 시드")
    gen.add_argument("--points", nargs="+", help="mmn: 점 목록 (예: 0,0 2,1 1,3)")
    gen.set_defaults(handler=cmd_gen)

    ratio = sub.add_parser("ratio", help="근사 비율 측정")
    ratio.add_argument("--family", choices=FAMILIES, help="생성기 계열")
    ratio.add_argument("--input", nargs="+", help="추가로 측정할 인스턴스 파일")
    ratio.add_argument("--algos", nargs="+", choices=ALGORITHMS, default=list(ALGORITHMS), help="비교할 알고리즘")
    ratio.add_argument("--reference", choices=REFERENCES, default=LOWER_BOUND, help="기준값")
    ratio.add_argument("--rsa", choices=("mst", "exact-small"), help="Steiner 트리 백엔드")
    ratio.add_argument("--k-values", type=int, nargs="+", default=[2, 3, 4, 5], help="tight: k 목록")
    ratio.add_argument("--epsilon", help="tight: ε")
    ratio.add_argument("--count", type=int, default=5, help="random/mmn: 인스턴스 개수")
    ratio.add_argument("--n", type=int, default=8, help="random: 쌍 개수 / mmn: 점 개수")
    ratio.add_argument("--d", type=int, default=2, help="차원")
    ratio.add_argument("--coord-min", type=int, default=-32, help="좌표 최솟값")
    ratio.add_argument("--coord-max", type=int, default=32, help="좌표 최댓값")
    ratio.add_argument("--seed", type=int, default=0, help="첫 인스턴스 시드")
    ratio.add_argument("--out", "-o", help="표 저장 경로")
    ratio.set_defaults(handler=cmd_ratio)

    render = sub.add_parser("render", help="SVG 출력 (2차원)")
    render.add_argument("instance", help="인스턴스 파일")
    render.add_argument("--network", help="네트워크 파일")
    render.add_argument("--out", "-o", required=True, help="SVG 저장 경로")
    render.add_argument("--separator", nargs="+", help="분리선 좌표 (x, y 순)")
    render.set_defaults(handler=cmd_render)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
        level = "DEBUG" if args.verbose else str(config.get("logging", {}).get("level", "INFO")).upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigError(f"알 수 없는 로그 레벨: {level}")
        logging.getLogger().setLevel(level)
        return args.handler(args, config)
    except GmmnError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
