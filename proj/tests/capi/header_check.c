/* The public header must compile as plain C. */
#include <stdio.h>
#include <string.h>

#include "poslat/poslat.h"

int main(void) {
  poslat_poset* p = NULL;
  size_t count = 0;
  if (poslat_poset_fixture("vposet", &p) != POSLAT_OK) return 1;
  if (poslat_poset_downset_count(p, &count) != POSLAT_OK || count != 5) return 1;
  poslat_poset_free(p);
  if (strcmp(poslat_status_name(POSLAT_ERR_NOT_DISTRIBUTIVE), "NotDistributive") != 0) {
    printf("unexpected name %s\n", poslat_status_name(POSLAT_ERR_NOT_DISTRIBUTIVE));
    return 1;
  }
  return 0;
}
