from apps.algebra.management.base import AlgebraCommand
from apps.algebra.services.character_service import CharacterService
from apps.core.exceptions import OracleDisagreement


class Command(AlgebraCommand):
    help = "Compute the character space M(A) and cross-check it against semisimplicity."
    command = "characters"

    def run_report(self, report, **options):
        algebra = self.load_algebra(report, options)
        chars = self.load_characters(report, algebra, options)

        report.payload["basis"] = list(algebra.basis_names)
        report.payload["count"] = len(chars)
        report.payload["set"] = chars.matrix

        for index, character in enumerate(chars):
            residual = CharacterService.residual(algebra, character.values)
            report.add_residual("multiplicativity", residual)
            if residual > options["tol"]:
                raise OracleDisagreement(
                    "Character fails the multiplicativity check.",
                    index=index,
                    values=character.values,
                    residual=residual,
                )

        separate = CharacterService.characters_separate_points(chars)
        report.payload["separate_points"] = separate
        if separate != report.payload["semisimple"]:
            raise OracleDisagreement(
                "Characters separate points but the trace form disagrees on semisimplicity.",
                separate_points=separate,
                semisimple=report.payload["semisimple"],
            )
