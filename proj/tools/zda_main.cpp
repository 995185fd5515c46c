#include <cstdio>

#include "zda.h"

int main(int argc, char** argv) {
  char* out = nullptr;
  char* err = nullptr;
  int code = zda_run_cli(argc - 1, argv + 1, &out, &err);
  if (out && *out) std::fputs(out, stdout);
  if (err && *err) std::fputs(err, stderr);
  zda_string_free(out);
  zda_string_free(err);
  return code;
}
