// Walks through the accumulating-breakpoint counterexample: the envelope,
// its exceptional values, and a non-convergent minimizing sequence at a kink.

#include <iostream>

#include <tradeoff/io.hpp>
#include <tradeoff/tradeoff.hpp>

int main(int argc, char** argv) {
  using namespace tradeoff;
  const int n = argc > 1 ? std::stoi(argv[1]) : 5;
  const auto table = remark12_fixture(n);
  const auto env = build_envelope(table);

  std::cout << "value function: " << io::envelope_to_json(env).dump() << "\n\n";
  std::cout << "exceptional alpha (minimizers disagree on G):\n" << io::exceptional_csv(exceptional_set(table, env));

  const Rational kink(3, 4);
  const auto report = analyze_alpha(table, env, kink);
  const auto schedule = geometric_schedule(Rational(1, 2), Rational(1, 2), 12);
  const auto seq = generate_eps_sequence<Rational>(table, env, kink, schedule, SequencePolicy::alternating);
  const auto verdict = verify_sequence_bracket(seq, report);
  std::cout << "\nalternating sequence at alpha = 3/4, G trace:";
  for (const auto& e : seq.entries) std::cout << " " << e.g_value.str();
  std::cout << "\nlimsup - liminf = " << verdict.oscillation()->str() << ", inside [" << report.g_minus.str() << ", "
            << report.g_plus.str() << "]\n";
}
