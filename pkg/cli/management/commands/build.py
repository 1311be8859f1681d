from algebras.scalars import FIELD_TAGS, RATIONAL
from cli.base import AlgebraCommand, EXIT_USAGE
from cli.repositories import AlgebraDocumentRepository
from constructions.presets import MATRIX_PRESETS, matrix_preset
from constructions.services import ConstructionService

KINDS = ('clifford', 'clifford-complex', 'twisted', 'even-twisted', 'quaternions', 'matrix')


class Command(AlgebraCommand):
    help = "Build an algebra and write its structure-constants document"

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=KINDS)
        parser.add_argument('--p', type=int, help="Generators squaring to +1 (clifford)")
        parser.add_argument('--q', type=int, help="Generators squaring to -1 (clifford)")
        parser.add_argument(
            '--n', type=int,
            help="Generator count (clifford-complex) or group dimension (twisted, even-twisted)"
        )
        parser.add_argument('--field', choices=FIELD_TAGS, default=RATIONAL)
        parser.add_argument('--basis', choices=sorted(MATRIX_PRESETS), help="Matrix basis (matrix)")
        parser.add_argument('--out', help="Output file; standard output when omitted")

    def run(self, kind, p=None, q=None, n=None, field=RATIONAL, basis=None, out=None, **options):
        algebra = self.build(kind, p, q, n, field, basis)
        if out:
            path = AlgebraDocumentRepository.save(algebra, out)
            self.stdout.write(self.style.SUCCESS(f"Wrote {algebra} ({algebra.dimension} basis elements) to {path}"))
        else:
            self.stdout.write(AlgebraDocumentRepository.render(algebra).decode(), ending="")

    def build(self, kind, p, q, n, field, basis):
        builders = ConstructionService()
        if kind == 'clifford':
            self.require(kind, p=p, q=q)
            return builders.clifford(p, q, field)
        if kind == 'clifford-complex':
            self.require(kind, n=n)
            return builders.clifford_complex(n)
        if kind == 'twisted':
            self.require(kind, n=n)
            return builders.twisted_group_algebra(n, field=field)
        if kind == 'even-twisted':
            self.require(kind, n=n)
            return builders.even_twisted_subalgebra(n, field=field)
        if kind == 'quaternions':
            return builders.quaternions(field)
        self.require(kind, basis=basis)
        return matrix_preset(basis)

    def require(self, kind, **values):
        missing = [f"--{name}" for name, value in values.items() if value is None]
        if missing:
            self.fail(f"build {kind} needs {' '.join(missing)}", returncode=EXIT_USAGE)
