""" commands.py -- Commands for Pythagoras.

    Language: Python 3.9

    Each command registers a subparser and an inner handler that returns the exit status:
    0 on success, 1 when a verification residual exceeds its tolerance. Usage problems
    raise UsageError (or DomainError) and are turned into status 2 by main.
"""

import argparse
import logging
import math

from pythagoras import config
from pythagoras.func import curved, euclid, projections, simplex as simplexes, suites
from pythagoras.func.curved import Geometry, GeometryKind, SurfacePoint
from pythagoras.utils import cities, frame_file
from pythagoras.utils.exceptions import UsageError
from pythagoras.utils.numeric import dumps, relative_residual


def setup(subparsers: argparse._SubParsersAction, command_info: dict):
    """Initialize commands."""
    help_command(subparsers, command_info)
    verify(subparsers, command_info)
    distance(subparsers, command_info)
    simplex(subparsers, command_info)
    project(subparsers, command_info)
    triples(subparsers, command_info)
    hypotenuse(subparsers, command_info)


def _command(subparsers, command_info: dict, name: str) -> argparse.ArgumentParser:
    info = command_info[name]
    return subparsers.add_parser(
        name,
        aliases=info["aliases"],
        help=info["desc"],
        description=info["desc"],
        epilog=info["footer"] or None,
    )


def _geometry(name: str, radius: float, default_radius: float = 1.0) -> Geometry:
    kind = GeometryKind.parse(name)
    return Geometry.from_kind(kind, default_radius if radius is None else radius)


def _print_fields(result: dict, as_json: bool):
    if as_json:
        print(dumps(result))
        return
    for key, value in result.items():
        if isinstance(value, float):
            value = f"{value:.6f}"
        elif value is None:
            value = "-"
        print(f"{key}: {value}")


def help_command(subparsers, command_info: dict):
    """Tell the user things about commands."""
    # Assume command aliases are unique. Map every alias back to its command.
    command_map = {}
    for command, info in command_info.items():
        command_map[command] = command
        for alias in info["aliases"]:
            command_map[alias] = command

    parser = _command(subparsers, command_info, "help")
    parser.add_argument("topic", nargs="?", help=command_info["help"]["args"]["topic"])

    def help(args: argparse.Namespace) -> int:
        """Print an overview of all commands, or the details of one.

        Parameters
        ----------
        args: argparse.Namespace
            Parsed arguments. args.topic selects a single command.
        """
        if not args.topic:
            logging.debug("High-level help called.")
            print("These are the things I can do:")
            for name, info in command_info.items():
                print(f"  {name}: {info['desc']}")
            return 0

        logging.debug(f"Help called for command '{args.topic}'.")
        try:
            name = command_map[args.topic]
        except KeyError:
            raise UsageError(f"Command '{args.topic}' does not exist.") from None
        info = command_info[name]
        print(f"{name}: {info['desc']}")
        if aliases := info["aliases"]:
            print("\nAliases: " + ", ".join(aliases))
        if arguments := info["args"]:
            print("\nArguments:")
            for arg, arg_desc in arguments.items():
                print(f"  {arg}: {arg_desc}")
        if footer := info["footer"]:
            print(f"\n{footer}")
        return 0

    parser.set_defaults(func=help)


def verify(subparsers, command_info: dict):
    """Run verification suites."""
    info = command_info["verify"]["args"]
    parser = _command(subparsers, command_info, "verify")
    parser.add_argument("suite", help=info["suite"])
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help=info["seed"])
    parser.add_argument("--cases", type=int, default=config.DEFAULT_CASES, help=info["cases"])
    parser.add_argument(
        "--tolerance", type=float, default=config.DEFAULT_TOLERANCE, help=info["tolerance"]
    )

    def verify(args: argparse.Namespace) -> int:
        """Run the suite and print its report. Exit 1 on any failing case."""
        report = suites.run_suite(
            args.suite, seed=args.seed, tolerance=args.tolerance, cases=args.cases
        )
        print(dumps(report.to_dict()))
        return 0 if report.passed else 1

    parser.set_defaults(func=verify)


def _parse_point(g: Geometry, text: str) -> SurfacePoint:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"Malformed point '{text}'. Use 'LAT,LON' or 'X,Y,Z'.") from None
    if len(values) == 2 and g.is_spherical:
        return curved.latlon_point(values[0], values[1], g.R)
    if len(values) == 2 and g.K == 0:
        values.append(0.0)
    if len(values) != 3:
        raise UsageError(f"Malformed point '{text}'. Use 'LAT,LON' or 'X,Y,Z'.")
    return curved.surface_point(g, values)


def distance(subparsers, command_info: dict):
    """Measure geodesic distances, optionally against the Pythagorean estimates."""
    info = command_info["distance"]["args"]
    parser = _command(subparsers, command_info, "distance")
    parser.add_argument("--geometry", default="spherical", help=info["geometry"])
    parser.add_argument("--radius", type=float, default=None, help=info["radius"])
    parser.add_argument("--p", default=None, help=info["p"])
    parser.add_argument("--q", default=None, help=info["q"])
    parser.add_argument("--cities", default=None, help=info["cities"])
    parser.add_argument("--via", default=None, help=info["via"])
    parser.add_argument("--compare", action="store_true", help=info["compare"])
    parser.add_argument("--json", action="store_true", help=info["json"])

    def distance(args: argparse.Namespace) -> int:
        """Print the geodesic from p to q. With --via, print the legs p-via and via-q;
        with --compare, also the curved and flat hypotenuses built on those legs.

        Parameters
        ----------
        args: argparse.Namespace
            Parsed arguments.
        """
        kind = GeometryKind.parse(args.geometry)
        default_radius = config.EARTH_RADIUS_KM if kind is GeometryKind.SPHERICAL else 1.0
        g = _geometry(args.geometry, args.radius, default_radius)
        if args.cities:
            if not g.is_spherical:
                raise UsageError("--cities needs spherical geometry.")
            names = [name for name in args.cities.split(",") if name.strip()]
            if len(names) != 2:
                raise UsageError(f"--cities takes exactly two names 'FROM,TO', got '{args.cities}'.")
            table = cities.CityTable()
            p, q = (curved.latlon_point(*table.lookup(name), g.R) for name in names)
            via = curved.latlon_point(*table.lookup(args.via), g.R) if args.via else None
        else:
            if args.p is None or args.q is None:
                raise UsageError("Give both --p and --q, or --cities.")
            p, q = _parse_point(g, args.p), _parse_point(g, args.q)
            via = _parse_point(g, args.via) if args.via else None
        if args.compare and via is None:
            raise UsageError("--compare needs a corner point given with --via.")
        if args.compare and not g.is_spherical:
            raise UsageError("--compare is defined for spherical geometry only.")

        result = {"geodesic": curved.geodesic_distance(g, p, q)}
        if via is not None:
            result["leg_1"] = curved.geodesic_distance(g, p, via)
            result["leg_2"] = curved.geodesic_distance(g, via, q)
        if args.compare:
            curved_estimate = curved.right_hypotenuse(g, result["leg_1"], result["leg_2"])
            flat_estimate = euclid.pythagoras_hypotenuse(result["leg_1"], result["leg_2"])
            result["spherical_pythagoras"] = curved_estimate
            result["flat_pythagoras"] = flat_estimate
            result["discrepancy"] = flat_estimate - curved_estimate
        logging.debug(f"Distance on {g}: {result}.")
        _print_fields(result, args.json)
        return 0

    parser.set_defaults(func=distance)


def simplex(subparsers, command_info: dict):
    """Tabulate a right-corner simplex."""
    info = command_info["simplex"]["args"]
    parser = _command(subparsers, command_info, "simplex")
    parser.add_argument("legs", type=float, nargs="+", help=info["legs"])
    parser.add_argument(
        "--tolerance", type=float, default=config.DEFAULT_TOLERANCE, help=info["tolerance"]
    )
    parser.add_argument("--json", action="store_true", help=info["json"])

    def simplex(args: argparse.Namespace) -> int:
        """Print face volumes, heights and normals, the simplex volume, the hypotenusal
        face volume three ways, and the Pythagoras and normal-closure residuals.
        """
        s = simplexes.RightSimplex(tuple(args.legs))
        table = simplexes.simplex_table(s)
        gram = simplexes.hypotenusal_volume_gram(s)
        pythagoras = simplexes.hypotenusal_volume_pythagoras(s)
        summary = {
            "n": s.n,
            "volume": simplexes.volume(s),
            "hypotenuse_gram": gram,
            "hypotenuse_pythagoras": pythagoras,
            "hypotenuse_heights": simplexes.hypotenusal_volume_heights(s),
            "pythagoras_residual": relative_residual(gram, pythagoras),
            "closure_residual": simplexes.normal_closure_residual(s),
        }
        if args.json:
            faces = [
                {"face": int(k), **{col: row[col] for col in table.columns}}
                for k, row in table.iterrows()
            ]
            print(dumps({"legs": list(s.legs), **summary, "faces": faces}))
        else:
            print(table.to_string())
            print()
            _print_fields(summary, as_json=False)
        worst = max(summary["pythagoras_residual"], summary["closure_residual"])
        return 0 if worst <= args.tolerance else 1

    parser.set_defaults(func=simplex)


def project(subparsers, command_info: dict):
    """Check the projection theorems on a frame read from a file."""
    info = command_info["project"]["args"]
    parser = _command(subparsers, command_info, "project")
    parser.add_argument("file", help=info["file"])
    parser.add_argument("--complex", action="store_true", help=info["complex"])
    parser.add_argument(
        "--tolerance", type=float, default=config.DEFAULT_TOLERANCE, help=info["tolerance"]
    )

    def project(args: argparse.Namespace) -> int:
        """Print the ProjectionReport of the frame as JSON. Exit 1 if its residual
        exceeds the tolerance.
        """
        frame = frame_file.load_frame(args.file, is_complex=args.complex)
        if not args.complex:
            report = projections.real_projection_volumes(frame)
        elif frame.m == 1:
            report = projections.complex_line_areas(frame.vectors[0])
        else:
            report = projections.complex_subspace_volumes(frame)
        print(dumps(report.as_dict()))
        return 0 if report.residual <= args.tolerance else 1

    parser.set_defaults(func=project)


def triples(subparsers, command_info: dict):
    """List Pythagorean triples."""
    info = command_info["triples"]["args"]
    parser = _command(subparsers, command_info, "triples")
    parser.add_argument("limit", type=int, help=info["limit"])
    parser.add_argument("--json", action="store_true", help=info["json"])

    def triples(args: argparse.Namespace) -> int:
        """Print one triple per line, or a JSON array of [m1, m2, m3]."""
        found = euclid.pythagorean_triples(args.limit)
        if args.json:
            print(dumps([list(t.as_tuple()) for t in found]))
        else:
            for t in found:
                print(" ".join(str(m) for m in t.as_tuple()))
        return 0

    parser.set_defaults(func=triples)


def _law_residual(g: Geometry, a: float, b: float, c: float, proper: bool) -> float:
    if g.K == 0:
        return relative_residual(a * a, b * b + c * c)
    R = g.R
    cos = math.cos if g.is_spherical else math.cosh
    if proper:
        return relative_residual(1.0 + cos(a / R), cos(b / R) + cos(c / R))
    return relative_residual(cos(a / R), cos(b / R) * cos(c / R))


def hypotenuse(subparsers, command_info: dict):
    """Solve right and proper triangles on constant-curvature surfaces."""
    info = command_info["hypotenuse"]["args"]
    parser = _command(subparsers, command_info, "hypotenuse")
    parser.add_argument("b", type=float, help=info["b"])
    parser.add_argument("c", type=float, help=info["c"])
    parser.add_argument("--geometry", default="euclidean", help=info["geometry"])
    parser.add_argument("--radius", type=float, default=None, help=info["radius"])
    parser.add_argument("--proper", action="store_true", help=info["proper"])
    parser.add_argument("--second-root", action="store_true", help=info["second_root"])
    parser.add_argument("--json", action="store_true", help=info["json"])

    def hypotenuse(args: argparse.Namespace) -> int:
        """Print the hypotenuse, the residual of its defining law and, for first roots,
        the residual of the matching disk-area identity.
        """
        g = _geometry(args.geometry, args.radius)
        if args.proper and args.second_root:
            raise UsageError("--second-root applies to right triangles only.")
        b, c = args.b, args.c
        if args.proper:
            a = curved.proper_hypotenuse(g, b, c)
        else:
            a = curved.right_hypotenuse(g, b, c, second_root=args.second_root)

        disk_residual = None
        if not args.second_root:
            A1, A2 = curved.disk_area(g, b), curved.disk_area(g, c)
            if args.proper:
                expected = A1 + A2
            else:
                expected = curved.unified_hypotenuse_area(g, A1, A2)
            disk_residual = relative_residual(curved.disk_area(g, a), expected)
        result = {
            "geometry": g.kind.value,
            "radius": None if g.K == 0 else g.R,
            "b": b,
            "c": c,
            "a": a,
            "law_residual": _law_residual(g, a, b, c, args.proper),
            "disk_residual": disk_residual,
        }
        _print_fields(result, args.json)
        return 0

    parser.set_defaults(func=hypotenuse)


